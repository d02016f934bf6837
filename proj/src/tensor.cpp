#include "lsa/tensor.hpp"

#include <stdexcept>

namespace lsa {

namespace {

Scalar par_sign(int parity_product, unsigned ch) {
    return parity_product % 2 == 0 ? Scalar::one(ch) : -Scalar::one(ch);
}

Vec to_dense(const SparseVec& s, std::size_t n, unsigned ch) {
    Vec v = zero_vec(n, ch);
    for (const auto& [c, x] : s) v[c] += x;
    return v;
}

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) s.emplace_back(c, v[c]);
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// SymbolSpace

SymbolSpace::SymbolSpace(const LieSuperAlgebra& source) : source_(source) {
    std::size_t t = source_.total_dim();
    cols_.assign(t * t, 0);
    for (int want = 0; want <= 1; ++want)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                if ((source_.parity(i) + source_.parity(j)) % 2 == want) {
                    cols_[i * t + j] = pairs_.size();
                    pairs_.emplace_back(i, j);
                }
    long te = source_.dim().even, to = source_.dim().odd;
    dim_ = {te * te + to * to, 2 * te * to};
}

std::size_t SymbolSpace::col(std::size_t i, std::size_t j) const {
    return cols_[i * source_.total_dim() + j];
}

int SymbolSpace::parity(std::size_t col) const {
    auto [i, j] = pairs_[col];
    return (source_.parity(i) + source_.parity(j)) % 2;
}

// ---------------------------------------------------------------------------
// BracketTable

BracketTable::BracketTable(const SymbolSpace& space) : n_(space.count()) {
    const LieSuperAlgebra& l = space.source();
    std::size_t t = l.total_dim();
    unsigned ch = l.characteristic();
    table_.resize(n_ * n_);
    for (std::size_t u = 0; u < n_; ++u) {
        auto [i, j] = space.pair_of(u);
        Scalar s = -par_sign(l.parity(i) * l.parity(j), ch);
        for (std::size_t v = 0; v < n_; ++v) {
            auto [k, m] = space.pair_of(v);
            SparseVec& entry = table_[u * n_ + v];
            for (std::size_t a = 0; a < t; ++a) {
                if (l.c(j, i, a).is_zero()) continue;
                for (std::size_t b = 0; b < t; ++b)
                    if (!l.c(k, m, b).is_zero())
                        entry.emplace_back(space.col(a, b), s * l.c(j, i, a) * l.c(k, m, b));
            }
        }
    }
}

SparseVec BracketTable::apply(std::size_t u, const SparseVec& v) const {
    unsigned ch = 0;
    Vec acc;
    for (const auto& [c, x] : v)
        for (const auto& [d, y] : on_symbols(u, c)) {
            if (acc.empty()) { ch = y.characteristic(); acc = zero_vec(n_, ch); }
            acc[d] += x * y;
        }
    return acc.empty() ? SparseVec{} : to_sparse(acc);
}

SparseVec BracketTable::apply(const SparseVec& u, std::size_t v) const {
    unsigned ch = 0;
    Vec acc;
    for (const auto& [c, x] : u)
        for (const auto& [d, y] : on_symbols(c, v)) {
            if (acc.empty()) { ch = y.characteristic(); acc = zero_vec(n_, ch); }
            acc[d] += x * y;
        }
    return acc.empty() ? SparseVec{} : to_sparse(acc);
}

Vec BracketTable::apply_dense(const Vec& u, const Vec& v) const {
    if (u.size() != n_ || v.size() != n_)
        throw std::invalid_argument("bracket table: length mismatch");
    Vec acc = zero_vec(n_, u.empty() ? 0 : u[0].characteristic());
    for (std::size_t a = 0; a < n_; ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < n_; ++b) {
            if (v[b].is_zero()) continue;
            Scalar f = u[a] * v[b];
            for (const auto& [d, y] : on_symbols(a, b))
                acc[d] += f * y;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Relations and closure

std::vector<Vec> pair_relations(const SymbolSpace& space) {
    const LieSuperAlgebra& l = space.source();
    std::size_t t = l.total_dim(), n = space.count();
    unsigned ch = l.characteristic();
    std::vector<Vec> rels;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t k = 0; k < t; ++k) {
                Scalar sij = par_sign(l.parity(i) * l.parity(j), ch);
                // (3a): [x_i,x_j](x)x_k - x_i(x)[x_j,x_k] + (-1)^{|i||j|} x_j(x)[x_i,x_k]
                Vec a = zero_vec(n, ch);
                for (std::size_t s = 0; s < t; ++s) {
                    a[space.col(s, k)] += l.c(i, j, s);
                    a[space.col(i, s)] -= l.c(j, k, s);
                    a[space.col(j, s)] += sij * l.c(i, k, s);
                }
                if (!is_zero_vec(a)) rels.push_back(std::move(a));
                // (3b): x_i(x)[x_j,x_k] - (-1)^{|k|(|i|+|j|)} [x_k,x_i](x)x_j
                //       + (-1)^{|i||j|} [x_j,x_i](x)x_k
                Scalar skij = par_sign(l.parity(k) * (l.parity(i) + l.parity(j)), ch);
                Vec b = zero_vec(n, ch);
                for (std::size_t s = 0; s < t; ++s) {
                    b[space.col(i, s)] += l.c(j, k, s);
                    b[space.col(s, j)] -= skij * l.c(k, i, s);
                    b[space.col(s, k)] += sij * l.c(j, i, s);
                }
                if (!is_zero_vec(b)) rels.push_back(std::move(b));
            }
    return rels;
}

bool closure_sweep(RelationSystem& rs, const BracketTable& bt) {
    std::size_t n = rs.space.count();
    unsigned ch = rs.space.source().characteristic();
    std::size_t before = rs.relations.dim();

    // (a) graded antisymmetry defects of the induced bracket
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u; v < n; ++v) {
            const SparseVec& buv = bt.on_symbols(u, v);
            const SparseVec& bvu = bt.on_symbols(v, u);
            if (buv.empty() && bvu.empty()) continue;
            Vec d = to_dense(buv, n, ch);
            Scalar s = par_sign(rs.space.parity(u) * rs.space.parity(v), ch);
            for (const auto& [c, x] : bvu) d[c] += s * x;
            if (!is_zero_vec(d)) rs.relations.grow(d);
        }
    rs.log.emplace_back("antisymmetry-defects", rs.relations.dim());

    // (b) graded Jacobi defects
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w) {
                SparseVec t1 = bt.apply(u, bt.on_symbols(v, w));
                SparseVec t2 = bt.apply(v, bt.on_symbols(w, u));
                SparseVec t3 = bt.apply(w, bt.on_symbols(u, v));
                if (t1.empty() && t2.empty() && t3.empty()) continue;
                int pu = rs.space.parity(u), pv = rs.space.parity(v), pw = rs.space.parity(w);
                Vec d = zero_vec(n, ch);
                for (const auto& [c, x] : t1) d[c] += par_sign(pu * pw, ch) * x;
                for (const auto& [c, x] : t2) d[c] += par_sign(pv * pu, ch) * x;
                for (const auto& [c, x] : t3) d[c] += par_sign(pw * pv, ch) * x;
                if (!is_zero_vec(d)) rs.relations.grow(d);
            }
    rs.log.emplace_back("jacobi-defects", rs.relations.dim());

    // (c) ideal closure of the relation subspace under the bracket
    std::vector<Vec> snapshot = rs.relations.basis();
    for (const Vec& r : snapshot) {
        SparseVec sr = to_sparse(r);
        for (std::size_t e = 0; e < n; ++e) {
            SparseVec left = bt.apply(sr, e);
            if (!left.empty()) rs.relations.grow(to_dense(left, n, ch));
            SparseVec right = bt.apply(e, sr);
            if (!right.empty()) rs.relations.grow(to_dense(right, n, ch));
        }
    }
    rs.log.emplace_back("ideal-closure", rs.relations.dim());

    return rs.relations.dim() > before;
}

RelationSystem closure(const LieSuperAlgebra& l, bool exterior) {
    if (!l.nilpotency().first)
        throw std::invalid_argument("closure: source algebra is not nilpotent");
    SymbolSpace space(l);
    std::size_t n = space.count(), t = l.total_dim();
    unsigned ch = l.characteristic();
    RelationSystem rs{space, Subspace(n, ch), {}};

    if (exterior) {
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                Vec v = zero_vec(n, ch);
                v[space.col(i, j)] += Scalar::one(ch);
                v[space.col(j, i)] += par_sign(l.parity(i) * l.parity(j), ch);
                if (!is_zero_vec(v)) rs.relations.grow(v);
            }
        for (std::size_t i = 0; i < t; ++i)
            if (l.parity(i) == 0) {
                Vec v = zero_vec(n, ch);
                v[space.col(i, i)] = Scalar::one(ch);
                rs.relations.grow(v);
            }
        rs.log.emplace_back("exterior-seed", rs.relations.dim());
    }
    for (const Vec& r : pair_relations(space))
        rs.relations.grow(r);
    rs.log.emplace_back("pair-relations", rs.relations.dim());

    BracketTable bt(space);
    while (closure_sweep(rs, bt)) {}
    return rs;
}

// ---------------------------------------------------------------------------
// Quotient construction

Vec derived_map(const SymbolSpace& space, const Vec& v) {
    const LieSuperAlgebra& l = space.source();
    std::size_t t = l.total_dim();
    Vec out = zero_vec(t, l.characteristic());
    for (std::size_t col = 0; col < space.count(); ++col) {
        if (v[col].is_zero()) continue;
        auto [i, j] = space.pair_of(col);
        for (std::size_t k = 0; k < t; ++k)
            out[k] += v[col] * l.c(i, j, k);
    }
    return out;
}

namespace {

TensorSquareResult build_result(RelationSystem rs, SquareKind kind) {
    const SymbolSpace& space = rs.space;
    const LieSuperAlgebra& l = space.source();
    std::size_t n = space.count();
    unsigned ch = l.characteristic();
    BracketTable bt(space);

    // Well-definedness witness: the derived map kills every final relation.
    for (const Vec& r : rs.relations.basis())
        if (!is_zero_vec(derived_map(space, r)))
            throw std::logic_error("closure produced a relation outside ker(derived map)");

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rs.relations.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    long n_even = 0, n_odd = 0;
    for (std::size_t col = 0; col < n; ++col)
        if (!is_pivot[col]) {
            comp.push_back(col);
            (space.parity(col) == 0 ? n_even : n_odd) += 1;
        }

    std::string op = kind == SquareKind::tensor ? "(x)" : "^";
    LieSuperAlgebra q(l.name() + op + l.name(), {n_even, n_odd}, ch);
    auto project = [&](Vec full) {
        Vec red = rs.relations.reduce(std::move(full));
        Vec out;
        out.reserve(comp.size());
        for (std::size_t c : comp) out.push_back(red[c]);
        return out;
    };
    for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = 0; b < comp.size(); ++b) {
            Vec w = project(to_dense(bt.on_symbols(comp[a], comp[b]), n, ch));
            for (std::size_t k = 0; k < comp.size(); ++k)
                q.set_bracket(a, b, k, w[k]);
        }
    if (!q.validate().empty())
        throw std::logic_error("tensor-square quotient fails superalgebra validation");

    std::vector<Vec> gen;
    gen.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        Vec e = zero_vec(n, ch);
        e[col] = Scalar::one(ch);
        gen.push_back(project(std::move(e)));
    }

    // The derived map must hit all of L^2.
    std::vector<Vec> images;
    for (std::size_t col = 0; col < n; ++col) {
        Vec e = zero_vec(n, ch);
        e[col] = Scalar::one(ch);
        images.push_back(derived_map(space, e));
    }
    if (!(GradedSubspace::span(l, images) == l.derived_subalgebra()))
        throw std::logic_error("derived map is not surjective onto L^2");

    SuperDim dim{n_even, n_odd};
    return {kind, space, std::move(rs.relations), std::move(q), std::move(gen), dim};
}

} // namespace

TensorSquareResult tensor_square(const LieSuperAlgebra& l) {
    return build_result(closure(l, false), SquareKind::tensor);
}

TensorSquareResult exterior_square(const LieSuperAlgebra& l) {
    return build_result(closure(l, true), SquareKind::exterior);
}

SquareIdeal square_ideal(const TensorSquareResult& tensor) {
    if (tensor.kind != SquareKind::tensor)
        throw std::invalid_argument("square_ideal: needs a tensor-square result");
    const SymbolSpace& space = tensor.symbols;
    const LieSuperAlgebra& l = space.source();
    const LieSuperAlgebra& q = tensor.quotient;
    std::size_t t = l.total_dim();
    unsigned ch = l.characteristic();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Vec v = tensor.generator_image[space.col(i, j)];
            axpy(v, par_sign(l.parity(i) * l.parity(j), ch),
                 tensor.generator_image[space.col(j, i)]);
            gens.push_back(std::move(v));
        }
    for (std::size_t i = 0; i < t; ++i)
        if (l.parity(i) == 0)
            gens.push_back(tensor.generator_image[space.col(i, i)]);
    GradedSubspace inside = GradedSubspace::span(q, gens);
    for (const Vec& v : inside.full_basis())
        for (std::size_t k = 0; k < q.total_dim(); ++k)
            if (!is_zero_vec(q.bracket(v, q.basis_vector(k))) ||
                !is_zero_vec(q.bracket(q.basis_vector(k), v)))
                throw std::logic_error("square ideal is not central in the tensor square");
    return {inside.dim(), std::move(inside)};
}

SuperDim multiplier_dim(const LieSuperAlgebra& l) {
    SuperDim ext = exterior_square(l).dim;
    SuperDim der = l.derived_subalgebra().dim();
    SuperDim m = ext - der;
    if (m.even < 0 || m.odd < 0)
        throw std::logic_error("multiplier dimension has a negative component");
    return m;
}

bool central_quotient_inequality(const LieSuperAlgebra& l, const GradedSubspace& n) {
    SuperDim nd = n.dim();
    if (!(nd == SuperDim{1, 0} || nd == SuperDim{0, 1}))
        throw std::invalid_argument("central_quotient_inequality: N must be one-dimensional");
    if (!l.derived_subalgebra().contains(n) || !l.center().contains(n))
        throw std::invalid_argument("central_quotient_inequality: N must lie in L^2 and Z(L)");
    long lhs = tensor_square(l).dim.total();
    long rhs = tensor_square(l.quotient(n)).dim.total() +
               module_tensor(l.abelianization().dim(), nd).total();
    return lhs <= rhs;
}

} // namespace lsa
