#ifndef LSA_SUPERALGEBRA_HPP
#define LSA_SUPERALGEBRA_HPP

#include "lsa/linalg.hpp"
#include "lsa/superdim.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsa {

class LieSuperAlgebra;

/// A parity-split subspace of an algebra: echelonized even and odd parts,
/// stored in the coordinates of the respective homogeneous block.
class GradedSubspace {
public:
    GradedSubspace(SuperDim parent_dim, unsigned ch);
    GradedSubspace(SuperDim parent_dim, Subspace even_part, Subspace odd_part);

    /// Span of homogeneous full-coordinate vectors; mixed-parity input is
    /// split into its homogeneous components.
    static GradedSubspace span(const LieSuperAlgebra& parent, const std::vector<Vec>& vectors);

    SuperDim parent_dim() const { return parent_dim_; }
    SuperDim dim() const { return {(long)even_.dim(), (long)odd_.dim()}; }
    const Subspace& even_part() const { return even_; }
    const Subspace& odd_part() const { return odd_; }

    bool contains(const Vec& full) const;
    bool contains(const GradedSubspace& o) const;
    Vec reduce(Vec full) const;

    /// Full-coordinate basis vectors, even rows first.
    std::vector<Vec> full_basis() const;
    /// Pivot columns in full coordinates, ascending.
    std::vector<std::size_t> full_pivots() const;

    bool operator==(const GradedSubspace& o) const {
        return parent_dim_ == o.parent_dim_ && even_ == o.even_ && odd_ == o.odd_;
    }

private:
    SuperDim parent_dim_;
    Subspace even_, odd_;
};

struct Violation {
    std::string axiom; // "grading" | "skew" | "jacobi"
    std::vector<std::size_t> indices;
    std::string detail;
};

struct HeisenbergTag {
    bool odd_center = false;
    long m = 0;
    long n = 0; // meaningful for even center only
    SuperDim complement{0, 0};
    bool operator==(const HeisenbergTag&) const = default;
};

/// A finite-dimensional Lie superalgebra given by structure constants on a
/// homogeneous basis, even basis vectors first.
class LieSuperAlgebra {
public:
    LieSuperAlgebra(std::string name, SuperDim dim, unsigned ch);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    SuperDim dim() const { return dim_; }
    std::size_t total_dim() const { return (std::size_t)dim_.total(); }
    unsigned characteristic() const { return ch_; }

    int parity(std::size_t i) const { return i < (std::size_t)dim_.even ? 0 : 1; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const;
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Scalar& coeff);

    Vec basis_vector(std::size_t i) const;

    std::vector<Violation> validate() const;
    Vec bracket(const Vec& u, const Vec& v) const;

    GradedSubspace derived_subalgebra() const;
    GradedSubspace center() const;
    std::vector<GradedSubspace> lower_central_series() const;
    /// (nilpotent?, class); abelian algebras report class 1.
    std::pair<bool, std::size_t> nilpotency() const;
    bool is_abelian() const;

    bool is_graded_ideal(const GradedSubspace& i) const;
    LieSuperAlgebra quotient(const GradedSubspace& ideal) const;
    LieSuperAlgebra abelianization() const;

private:
    std::string name_;
    SuperDim dim_;
    unsigned ch_;
    std::vector<Scalar> c_; // c[i][j][k], row-major over (i,j,k)
};

LieSuperAlgebra direct_sum(const LieSuperAlgebra& a, const LieSuperAlgebra& b);

LieSuperAlgebra abelian(SuperDim d, unsigned ch = 0);
/// H(m,n): even center, dim (2m+1|n); requires m+n >= 1.
LieSuperAlgebra heisenberg_even(long m, long n, unsigned ch = 0);
/// H_m: odd center, dim (m|m+1); requires m >= 1.
LieSuperAlgebra heisenberg_odd(long m, unsigned ch = 0);

/// Recognizes L isomorphic to H(m,n) + A(a|b) (even center) or H_m + A(a|b)
/// (odd center); nullopt when L is not of that shape.
std::optional<HeisenbergTag> recognize_heisenberg_plus_abelian(const LieSuperAlgebra& l);

} // namespace lsa

#endif
