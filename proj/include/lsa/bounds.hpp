#ifndef LSA_BOUNDS_HPP
#define LSA_BOUNDS_HPP

#include "lsa/superalgebra.hpp"
#include "lsa/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsa {

struct BoundReport {
    std::string name;
    SuperDim dim;         // (k|l)
    SuperDim derived;     // (r|s)
    long bound = 0;       // (k+l-(r+s))(k+l-1)+2
    long actual = 0;      // total dim of L(x)L
    SuperDim actual_graded;
    long slack = 0;
    bool equality = false;
    std::optional<HeisenbergTag> classified;
};

/// (k+l-(r+s))(k+l-1)+2; requires k+l >= 1 and 1 <= r+s <= k+l.
long upper_bound(long k, long l, long r, long s);

/// Verifies the tensor-square upper bound on a non-abelian nilpotent algebra
/// and, for derived dimension (1|0), the equality classification.
BoundReport check_bound(const LieSuperAlgebra& l);

/// Runs check_bound over every H(m,n)+A(a|b) and H_m+A(a|b) of total
/// dimension <= max_total_dim; fails on negative slack or a misclassified
/// equality case.
std::vector<BoundReport> family_sweep(long max_total_dim, long ceiling = 7, unsigned ch = 0);

/// The swept family itself (also the cross-module test family).
std::vector<LieSuperAlgebra> heisenberg_family(long max_total_dim, unsigned ch = 0);

} // namespace lsa

#endif
