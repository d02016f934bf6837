#include "lsa/scalar.hpp"

namespace lsa {

void Scalar::check_characteristic(unsigned ch) {
    if (ch == 0) return;
    if (ch == 2 || ch == 3)
        throw std::invalid_argument("characteristic 2 and 3 are not supported");
    mpz_class p(ch);
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("characteristic must be 0 or a prime > 3");
}

void Scalar::normalize() {
    v_.canonicalize();
    if (ch_ == 0) return;
    // Residue in [0, p): numerator times inverse of denominator mod p.
    mpz_class p(ch_);
    mpz_class num = v_.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = v_.get_den() % p;
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("denominator not invertible mod p");
        num = (num * inv) % p;
    }
    v_ = mpq_class(num);
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero");
    if (ch_ == 0)
        return Scalar(mpq_class(1) / v_, 0);
    mpz_class p(ch_), inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(mpq_class(inv), ch_);
}

Scalar Scalar::parse(const std::string& text, unsigned ch) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("bad scalar literal: " + text);
    if (v.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    return Scalar(v, ch);
}

std::string Scalar::str() const {
    return v_.get_str();
}

} // namespace lsa
