#include "lsa/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsa {

Vec zero_vec(std::size_t n, unsigned ch) {
    return Vec(n, Scalar::zero(ch));
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (y.size() != x.size())
        throw std::invalid_argument("axpy: length mismatch");
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += a * x[i];
}

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned ch)
    : rows_(rows), cols_(cols), ch_(ch), data_(rows * cols, Scalar::zero(ch)) {}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, unsigned ch) {
    Matrix m(rows.size(), cols, ch);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("from_rows: ragged row");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n, unsigned ch) {
    Matrix m(n, n, ch);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(ch);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, ch_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

std::vector<Vec> kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    unsigned ch = m.characteristic();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(m.cols(), ch);
        v[c] = Scalar::one(ch);
        for (std::size_t i = 0; i < rr.rank; ++i)
            v[rr.pivots[i]] = -rr.reduced.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Subspace::Subspace(std::size_t ambient, unsigned ch) : ambient_(ambient), ch_(ch) {}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient, unsigned ch) {
    Subspace s(ambient, ch);
    for (const Vec& v : vectors) s.grow(v);
    return s;
}

void Subspace::check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_ || ch_ != o.ch_)
        throw std::invalid_argument("subspace ambient/field mismatch");
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("reduce: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = v[pivots_[i]];
        if (!c.is_zero())
            axpy(v, -c, rows_[i]);
    }
    return v;
}

bool Subspace::grow(const Vec& v) {
    Vec r = reduce(v);
    std::size_t lead = 0;
    while (lead < ambient_ && r[lead].is_zero()) ++lead;
    if (lead == ambient_) return false;
    Scalar inv = r[lead].inverse();
    for (Scalar& s : r) s *= inv;
    // Back-eliminate the new pivot from existing rows, then insert in pivot order.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = rows_[i][lead];
        if (!c.is_zero())
            axpy(rows_[i], -c, r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = pos - pivots_.begin();
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    check_ambient(o);
    Subspace s = *this;
    for (const Vec& v : o.rows_) s.grow(v);
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
    check_ambient(o);
    // Left kernel of stack(U; -V): coefficient vectors (c, d) with c.U = d.V.
    std::vector<Vec> stacked = rows_;
    for (const Vec& v : o.rows_) {
        Vec neg = v;
        for (Scalar& s : neg) s = -s;
        stacked.push_back(std::move(neg));
    }
    Matrix a = Matrix::from_rows(stacked, ambient_, ch_);
    std::vector<Vec> coeffs = kernel(a.transposed());
    std::vector<Vec> gens;
    for (const Vec& w : coeffs) {
        Vec x = zero_vec(ambient_, ch_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            axpy(x, w[i], rows_[i]);
        gens.push_back(std::move(x));
    }
    return span(gens, ambient_, ch_);
}

bool Subspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

bool Subspace::contains(const Subspace& o) const {
    check_ambient(o);
    return std::all_of(o.rows_.begin(), o.rows_.end(),
                       [this](const Vec& v) { return contains(v); });
}

} // namespace lsa
