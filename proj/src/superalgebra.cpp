#include "lsa/superalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsa {

namespace {

Scalar sign(int exponent_parity, unsigned ch) {
    return exponent_parity % 2 == 0 ? Scalar::one(ch) : -Scalar::one(ch);
}

} // namespace

// ---------------------------------------------------------------------------
// GradedSubspace

GradedSubspace::GradedSubspace(SuperDim parent_dim, unsigned ch)
    : parent_dim_(parent_dim),
      even_((std::size_t)parent_dim.even, ch),
      odd_((std::size_t)parent_dim.odd, ch) {}

GradedSubspace::GradedSubspace(SuperDim parent_dim, Subspace even_part, Subspace odd_part)
    : parent_dim_(parent_dim), even_(std::move(even_part)), odd_(std::move(odd_part)) {
    if (even_.ambient() != (std::size_t)parent_dim_.even ||
        odd_.ambient() != (std::size_t)parent_dim_.odd)
        throw std::invalid_argument("graded subspace: part ambient mismatch");
}

GradedSubspace GradedSubspace::span(const LieSuperAlgebra& parent, const std::vector<Vec>& vectors) {
    SuperDim d = parent.dim();
    unsigned ch = parent.characteristic();
    Subspace ev((std::size_t)d.even, ch), od((std::size_t)d.odd, ch);
    for (const Vec& v : vectors) {
        if (v.size() != parent.total_dim())
            throw std::invalid_argument("graded span: length mismatch");
        Vec e(v.begin(), v.begin() + d.even);
        Vec o(v.begin() + d.even, v.end());
        ev.grow(e);
        od.grow(o);
    }
    return GradedSubspace(d, std::move(ev), std::move(od));
}

bool GradedSubspace::contains(const Vec& full) const {
    return is_zero_vec(reduce(full));
}

bool GradedSubspace::contains(const GradedSubspace& o) const {
    return even_.contains(o.even_) && odd_.contains(o.odd_);
}

Vec GradedSubspace::reduce(Vec full) const {
    if (full.size() != (std::size_t)parent_dim_.total())
        throw std::invalid_argument("graded reduce: length mismatch");
    Vec e(full.begin(), full.begin() + parent_dim_.even);
    Vec o(full.begin() + parent_dim_.even, full.end());
    e = even_.reduce(std::move(e));
    o = odd_.reduce(std::move(o));
    std::copy(o.begin(), o.end(), std::copy(e.begin(), e.end(), full.begin()));
    return full;
}

std::vector<Vec> GradedSubspace::full_basis() const {
    unsigned ch = even_.characteristic();
    std::vector<Vec> out;
    for (const Vec& e : even_.basis()) {
        Vec v = zero_vec(parent_dim_.total(), ch);
        std::copy(e.begin(), e.end(), v.begin());
        out.push_back(std::move(v));
    }
    for (const Vec& o : odd_.basis()) {
        Vec v = zero_vec(parent_dim_.total(), ch);
        std::copy(o.begin(), o.end(), v.begin() + parent_dim_.even);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::size_t> GradedSubspace::full_pivots() const {
    std::vector<std::size_t> p = even_.pivots();
    for (std::size_t q : odd_.pivots())
        p.push_back(q + parent_dim_.even);
    return p;
}

// ---------------------------------------------------------------------------
// LieSuperAlgebra

LieSuperAlgebra::LieSuperAlgebra(std::string name, SuperDim dim, unsigned ch)
    : name_(std::move(name)), dim_(dim), ch_(ch) {
    Scalar::check_characteristic(ch);
    if (dim.even < 0 || dim.odd < 0)
        throw std::invalid_argument("negative dimension");
    std::size_t t = total_dim();
    c_.assign(t * t * t, Scalar::zero(ch));
}

const Scalar& LieSuperAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
    std::size_t t = total_dim();
    return c_[(i * t + j) * t + k];
}

void LieSuperAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff) {
    std::size_t t = total_dim();
    if (i >= t || j >= t || k >= t)
        throw std::out_of_range("structure constant index out of range");
    c_[(i * t + j) * t + k] = coeff;
}

Vec LieSuperAlgebra::basis_vector(std::size_t i) const {
    Vec v = zero_vec(total_dim(), ch_);
    v[i] = Scalar::one(ch_);
    return v;
}

Vec LieSuperAlgebra::bracket(const Vec& u, const Vec& v) const {
    std::size_t t = total_dim();
    if (u.size() != t || v.size() != t)
        throw std::invalid_argument("bracket: length mismatch");
    Vec w = zero_vec(t, ch_);
    for (std::size_t i = 0; i < t; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < t; ++j) {
            if (v[j].is_zero()) continue;
            Scalar f = u[i] * v[j];
            for (std::size_t k = 0; k < t; ++k)
                if (!c(i, j, k).is_zero())
                    w[k] += f * c(i, j, k);
        }
    }
    return w;
}

std::vector<Violation> LieSuperAlgebra::validate() const {
    std::vector<Violation> out;
    std::size_t t = total_dim();
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t k = 0; k < t; ++k) {
                if (!c(i, j, k).is_zero() && parity(k) != (parity(i) + parity(j)) % 2)
                    out.push_back({"grading", {i, j, k}, "bracket lands in wrong parity"});
                if (j >= i) {
                    Scalar expect = -(sign(parity(i) * parity(j), ch_) * c(i, j, k));
                    if (c(j, i, k) != expect)
                        out.push_back({"skew", {i, j, k}, "graded skew-symmetry fails"});
                }
            }
    // [e_a, [e_b, e_c]] accumulated straight from structure-constant rows.
    auto nested = [&](Vec& acc, const Scalar& coeff, std::size_t a, std::size_t b, std::size_t c2) {
        for (std::size_t s = 0; s < t; ++s) {
            if (c(b, c2, s).is_zero()) continue;
            Scalar f = coeff * c(b, c2, s);
            for (std::size_t k = 0; k < t; ++k)
                if (!c(a, s, k).is_zero())
                    acc[k] += f * c(a, s, k);
        }
    };
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i; j < t; ++j)
            for (std::size_t k = j; k < t; ++k) {
                Vec s = zero_vec(t, ch_);
                nested(s, sign(parity(i) * parity(k), ch_), i, j, k);
                nested(s, sign(parity(j) * parity(i), ch_), j, k, i);
                nested(s, sign(parity(k) * parity(j), ch_), k, i, j);
                if (!is_zero_vec(s))
                    out.push_back({"jacobi", {i, j, k}, "graded Jacobi identity fails"});
            }
    return out;
}

GradedSubspace LieSuperAlgebra::derived_subalgebra() const {
    std::size_t t = total_dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Vec w(total_dim(), Scalar::zero(ch_));
            bool nz = false;
            for (std::size_t k = 0; k < t; ++k) {
                w[k] = c(i, j, k);
                nz = nz || !w[k].is_zero();
            }
            if (nz) gens.push_back(std::move(w));
        }
    return GradedSubspace::span(*this, gens);
}

GradedSubspace LieSuperAlgebra::center() const {
    std::size_t t = total_dim();
    unsigned ch = ch_;
    auto solve_part = [&](std::size_t offset, std::size_t count) {
        // Unknown z supported on one homogeneous block: rows are the
        // equations [z, x_i] = 0, one per (i, k).
        Matrix m(t * t, count, ch);
        for (std::size_t e = 0; e < count; ++e)
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t k = 0; k < t; ++k)
                    m.at(i * t + k, e) = c(offset + e, i, k);
        return Subspace::span(kernel(m), count, ch);
    };
    Subspace ev = solve_part(0, (std::size_t)dim_.even);
    Subspace od = solve_part((std::size_t)dim_.even, (std::size_t)dim_.odd);
    return GradedSubspace(dim_, std::move(ev), std::move(od));
}

std::vector<GradedSubspace> LieSuperAlgebra::lower_central_series() const {
    std::size_t t = total_dim();
    std::vector<Vec> all;
    for (std::size_t i = 0; i < t; ++i) all.push_back(basis_vector(i));
    std::vector<GradedSubspace> series{GradedSubspace::span(*this, all)};
    for (;;) {
        const GradedSubspace& cur = series.back();
        std::vector<Vec> next;
        for (const Vec& v : cur.full_basis())
            for (std::size_t j = 0; j < t; ++j)
                next.push_back(bracket(v, basis_vector(j)));
        GradedSubspace nxt = GradedSubspace::span(*this, next);
        if (nxt == cur) break; // stabilized (non-nilpotent, or zero repeated)
        series.push_back(std::move(nxt));
        if (series.back().dim().total() == 0) break;
    }
    return series;
}

std::pair<bool, std::size_t> LieSuperAlgebra::nilpotency() const {
    std::vector<GradedSubspace> s = lower_central_series();
    if (s.back().dim().total() != 0)
        return {false, 0};
    if (s.size() == 1) // zero algebra
        return {true, 1};
    // s = [L^1, ..., L^c, 0]; abelian reports class 1.
    return {true, std::max<std::size_t>(s.size() - 1, 1)};
}

bool LieSuperAlgebra::is_abelian() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool LieSuperAlgebra::is_graded_ideal(const GradedSubspace& s) const {
    if (s.parent_dim() != dim_) return false;
    for (const Vec& v : s.full_basis())
        for (std::size_t j = 0; j < total_dim(); ++j)
            if (!s.contains(bracket(v, basis_vector(j))))
                return false;
    return true;
}

LieSuperAlgebra LieSuperAlgebra::quotient(const GradedSubspace& ideal) const {
    if (!is_graded_ideal(ideal))
        throw std::invalid_argument("quotient: not a graded ideal");
    std::vector<std::size_t> pivots = ideal.full_pivots();
    std::vector<bool> is_pivot(total_dim(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < total_dim(); ++i)
        if (!is_pivot[i]) comp.push_back(i);

    SuperDim qdim{dim_.even - (long)ideal.even_part().dim(),
                  dim_.odd - (long)ideal.odd_part().dim()};
    LieSuperAlgebra q(name_ + "/I", qdim, ch_);
    for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = 0; b < comp.size(); ++b) {
            Vec w = ideal.reduce(bracket(basis_vector(comp[a]), basis_vector(comp[b])));
            for (std::size_t k = 0; k < comp.size(); ++k)
                q.set_bracket(a, b, k, w[comp[k]]);
        }
    if (!q.validate().empty())
        throw std::logic_error("quotient: result fails validation");
    return q;
}

LieSuperAlgebra LieSuperAlgebra::abelianization() const {
    LieSuperAlgebra q = quotient(derived_subalgebra());
    q.set_name(name_ + "^ab");
    return q;
}

// ---------------------------------------------------------------------------
// Constructions

LieSuperAlgebra direct_sum(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
    if (a.characteristic() != b.characteristic())
        throw std::invalid_argument("direct_sum: characteristic mismatch");
    SuperDim da = a.dim(), db = b.dim();
    LieSuperAlgebra s(a.name() + "+" + b.name(), da + db, a.characteristic());
    // Merged ordering: evens of both summands precede all odds.
    auto map_a = [&](std::size_t i) {
        return i < (std::size_t)da.even ? i : i + db.even;
    };
    auto map_b = [&](std::size_t i) {
        return i < (std::size_t)db.even ? i + da.even : i + da.even + da.odd;
    };
    for (std::size_t i = 0; i < a.total_dim(); ++i)
        for (std::size_t j = 0; j < a.total_dim(); ++j)
            for (std::size_t k = 0; k < a.total_dim(); ++k)
                if (!a.c(i, j, k).is_zero())
                    s.set_bracket(map_a(i), map_a(j), map_a(k), a.c(i, j, k));
    for (std::size_t i = 0; i < b.total_dim(); ++i)
        for (std::size_t j = 0; j < b.total_dim(); ++j)
            for (std::size_t k = 0; k < b.total_dim(); ++k)
                if (!b.c(i, j, k).is_zero())
                    s.set_bracket(map_b(i), map_b(j), map_b(k), b.c(i, j, k));
    return s;
}

LieSuperAlgebra abelian(SuperDim d, unsigned ch) {
    return LieSuperAlgebra("A" + d.str(), d, ch);
}

namespace {

// Sets [x_i, x_j] = coeff * x_k together with its graded-skew partner.
void set_skew_pair(LieSuperAlgebra& l, std::size_t i, std::size_t j, std::size_t k,
                   const Scalar& coeff) {
    l.set_bracket(i, j, k, coeff);
    if (i != j) {
        Scalar partner = (l.parity(i) * l.parity(j)) % 2 == 0 ? -coeff : coeff;
        l.set_bracket(j, i, k, partner);
    }
}

} // namespace

LieSuperAlgebra heisenberg_even(long m, long n, unsigned ch) {
    if (m < 0 || n < 0 || m + n < 1)
        throw std::invalid_argument("heisenberg_even: need m+n >= 1");
    LieSuperAlgebra h("H(" + std::to_string(m) + "," + std::to_string(n) + ")",
                      {2 * m + 1, n}, ch);
    std::size_t z = 2 * m; // last even index
    for (long i = 0; i < m; ++i)
        set_skew_pair(h, i, m + i, z, Scalar::one(ch));
    for (long j = 0; j < n; ++j)
        h.set_bracket(2 * m + 1 + j, 2 * m + 1 + j, z, Scalar::one(ch));
    return h;
}

LieSuperAlgebra heisenberg_odd(long m, unsigned ch) {
    if (m < 1)
        throw std::invalid_argument("heisenberg_odd: need m >= 1");
    LieSuperAlgebra h("H_" + std::to_string(m), {m, m + 1}, ch);
    std::size_t z = 2 * m; // last odd index
    for (long j = 0; j < m; ++j)
        set_skew_pair(h, j, m + j, z, Scalar::one(ch));
    return h;
}

// ---------------------------------------------------------------------------
// Heisenberg-plus-abelian recognizer

std::optional<HeisenbergTag> recognize_heisenberg_plus_abelian(const LieSuperAlgebra& l) {
    if (!l.nilpotency().first) return std::nullopt;
    GradedSubspace derived = l.derived_subalgebra();
    SuperDim dd = derived.dim();
    bool even_center = (dd == SuperDim{1, 0});
    bool odd_center = (dd == SuperDim{0, 1});
    if (!even_center && !odd_center) return std::nullopt;

    GradedSubspace z = l.center();
    if (!z.contains(derived)) return std::nullopt;

    // Complement coordinates of Z(L), split by parity.
    std::vector<bool> is_pivot(l.total_dim(), false);
    for (std::size_t p : z.full_pivots()) is_pivot[p] = true;
    std::vector<std::size_t> ce, co;
    for (std::size_t i = 0; i < l.total_dim(); ++i) {
        if (is_pivot[i]) continue;
        (l.parity(i) == 0 ? ce : co).push_back(i);
    }

    // The bracket-induced form on L/Z(L), valued along the generator of L^2.
    Vec zvec = derived.full_basis()[0];
    std::size_t lead = derived.full_pivots()[0];
    auto form = [&](std::size_t a, std::size_t b) {
        Vec w = l.bracket(l.basis_vector(a), l.basis_vector(b));
        Scalar coeff = w[lead] / zvec[lead];
        axpy(w, -coeff, zvec);
        if (!is_zero_vec(w))
            throw std::logic_error("bracket escapes the derived line");
        return coeff;
    };
    unsigned ch = l.characteristic();
    auto block_rank = [&](const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
        Matrix m(rows.size(), cols.size(), ch);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m.at(i, j) = form(rows[i], cols[j]);
        return rref(std::move(m)).rank;
    };

    HeisenbergTag tag;
    if (even_center) {
        if (ce.size() % 2 != 0) return std::nullopt;
        if (block_rank(ce, ce) != ce.size()) return std::nullopt; // alternating block
        if (block_rank(co, co) != co.size()) return std::nullopt; // symmetric block
        tag.odd_center = false;
        tag.m = (long)(ce.size() / 2);
        tag.n = (long)co.size();
        tag.complement = {z.dim().even - 1, z.dim().odd};
    } else {
        if (ce.size() != co.size()) return std::nullopt;
        if (block_rank(ce, co) != ce.size()) return std::nullopt; // even-odd pairing
        if (ce.empty()) return std::nullopt;
        tag.odd_center = true;
        tag.m = (long)ce.size();
        tag.n = 0;
        tag.complement = {z.dim().even, z.dim().odd - 1};
    }
    return tag;
}

} // namespace lsa
