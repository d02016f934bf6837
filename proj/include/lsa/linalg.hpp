#ifndef LSA_LINALG_HPP
#define LSA_LINALG_HPP

#include "lsa/scalar.hpp"

#include <cstddef>
#include <vector>

namespace lsa {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, unsigned ch);
bool is_zero_vec(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x); // y += a*x

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, unsigned ch);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, unsigned ch);
    static Matrix identity(std::size_t n, unsigned ch);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned characteristic() const { return ch_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Matrix transposed() const;

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_, cols_;
    unsigned ch_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form (Gauss-Jordan, exact).
RrefResult rref(Matrix m);

/// Basis of the right null space { x : m x = 0 }.
std::vector<Vec> kernel(const Matrix& m);

/// A subspace of F^ambient stored as the unique RREF basis of its row span.
/// Equality of subspaces is literal row-list equality.
class Subspace {
public:
    Subspace(std::size_t ambient, unsigned ch); // zero subspace
    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient, unsigned ch);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    unsigned characteristic() const { return ch_; }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    std::size_t codim() const { return ambient_ - dim(); }

    /// Residual of v after eliminating all pivot coordinates; zero iff v is a member.
    Vec reduce(Vec v) const;

    /// Adds v to the span; returns true if the rank grew.
    bool grow(const Vec& v);

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    void check_ambient(const Subspace& o) const;

    std::size_t ambient_;
    unsigned ch_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace lsa

#endif
