#ifndef LSA_TENSOR_HPP
#define LSA_TENSOR_HPP

#include "lsa/gamma.hpp"
#include "lsa/superalgebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lsa {

/// The free graded span of pair symbols e(i,j) over a source algebra of
/// total dimension t: t^2 symbols, parity |e(i,j)| = |i|+|j|, even symbols
/// enumerated before odd ones.
class SymbolSpace {
public:
    explicit SymbolSpace(const LieSuperAlgebra& source);

    const LieSuperAlgebra& source() const { return source_; }
    std::size_t count() const { return cols_.size(); }
    SuperDim dim() const { return dim_; }

    std::size_t col(std::size_t i, std::size_t j) const;
    std::pair<std::size_t, std::size_t> pair_of(std::size_t col) const { return pairs_[col]; }
    int parity(std::size_t col) const;

private:
    LieSuperAlgebra source_;
    SuperDim dim_;
    std::vector<std::size_t> cols_;                          // (i,j) -> column
    std::vector<std::pair<std::size_t, std::size_t>> pairs_; // column -> (i,j)
};

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// The bracket of relation (4) on basis symbols,
/// B(e(i,j), e(k,l)) = -(-1)^{|i||j|} ([x_j,x_i] (x) [x_k,x_l]),
/// tabulated once and extended bilinearly.
class BracketTable {
public:
    explicit BracketTable(const SymbolSpace& space);

    const SparseVec& on_symbols(std::size_t u, std::size_t v) const {
        return table_[u * n_ + v];
    }
    SparseVec apply(std::size_t u, const SparseVec& v) const;    // B(e_u, v)
    SparseVec apply(const SparseVec& u, std::size_t v) const;    // B(u, e_v)
    Vec apply_dense(const Vec& u, const Vec& v) const;

private:
    std::size_t n_;
    std::vector<SparseVec> table_;
};

/// Growing relation subspace of the symbol space, with a log of which rule
/// produced each batch.
struct RelationSystem {
    SymbolSpace space;
    Subspace relations;
    std::vector<std::pair<std::string, std::size_t>> log; // (rule, new rank)
};

/// Crossed-pairing relations (3a)/(3b) instantiated on all basis triples.
std::vector<Vec> pair_relations(const SymbolSpace& space);

/// One closure sweep: antisymmetry defects, Jacobi defects, then ideal
/// bracketing of current relations; returns true if the rank grew.
bool closure_sweep(RelationSystem& rs, const BracketTable& bt);

/// Fixpoint relation closure; exterior mode seeds the graded-symmetry and
/// even-diagonal relations first.  Rejects non-nilpotent sources.
RelationSystem closure(const LieSuperAlgebra& l, bool exterior = false);

enum class SquareKind { tensor, exterior };

struct TensorSquareResult {
    SquareKind kind;
    SymbolSpace symbols;
    Subspace relations;
    LieSuperAlgebra quotient;          // the computed L(x)L or L^L
    std::vector<Vec> generator_image;  // symbol column -> vector in quotient coords
    SuperDim dim;
};

TensorSquareResult tensor_square(const LieSuperAlgebra& l);
TensorSquareResult exterior_square(const LieSuperAlgebra& l);

struct SquareIdeal {
    SuperDim dim;
    GradedSubspace inside; // subspace of the tensor-square quotient
};

/// The central graded ideal spanned by g(i,j) + (-1)^{|i||j|} g(j,i) and
/// g(i,i) for even i; verifies centrality in the quotient.
SquareIdeal square_ideal(const TensorSquareResult& tensor);

/// dim L^L - dim L^2, componentwise; throws on a negative component.
SuperDim multiplier_dim(const LieSuperAlgebra& l);

/// The induction inequality
/// dim(L(x)L) <= dim(L/N (x) L/N) + dim(L^ab (x)_mod N), total dimensions,
/// for a one-dimensional graded ideal N inside L^2 and Z(L).
bool central_quotient_inequality(const LieSuperAlgebra& l, const GradedSubspace& n);

/// Image of the derived map e(i,j) -> [x_i, x_j] on a symbol-space vector.
Vec derived_map(const SymbolSpace& space, const Vec& v);

} // namespace lsa

#endif
