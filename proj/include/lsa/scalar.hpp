#ifndef LSA_SCALAR_HPP
#define LSA_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lsa {

/// Exact field scalar: a rational number (characteristic 0) or an element
/// of a prime field GF(p) with p > 3.  The characteristic is fixed at
/// construction and must agree between operands.
class Scalar {
public:
    Scalar() : ch_(0) {}
    explicit Scalar(long n, unsigned ch = 0) : v_(n), ch_(ch) { normalize(); }
    Scalar(const mpq_class& v, unsigned ch) : v_(v), ch_(ch) { normalize(); }

    static Scalar zero(unsigned ch) { return Scalar(0, ch); }
    static Scalar one(unsigned ch) { return Scalar(1, ch); }

    /// Parses "n" or "n/d" with optional sign.
    static Scalar parse(const std::string& text, unsigned ch);

    static void check_characteristic(unsigned ch);

    unsigned characteristic() const { return ch_; }
    bool is_zero() const { return v_ == 0; }
    const mpq_class& value() const { return v_; }

    Scalar operator-() const { return Scalar(mpq_class(-v_), ch_); }
    Scalar operator+(const Scalar& o) const { match(o); return Scalar(mpq_class(v_ + o.v_), ch_); }
    Scalar operator-(const Scalar& o) const { match(o); return Scalar(mpq_class(v_ - o.v_), ch_); }
    Scalar operator*(const Scalar& o) const { match(o); return Scalar(mpq_class(v_ * o.v_), ch_); }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { match(o); return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    void match(const Scalar& o) const {
        if (ch_ != o.ch_)
            throw std::invalid_argument("scalar characteristic mismatch");
    }

    mpq_class v_;
    unsigned ch_;
};

} // namespace lsa

#endif
