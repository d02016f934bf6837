#ifndef LSA_GAMMA_HPP
#define LSA_GAMMA_HPP

#include "lsa/superalgebra.hpp"
#include "lsa/superdim.hpp"

#include <string>
#include <vector>

namespace lsa {

/// A basis generator of the universal quadratic functor: gamma(i) for an
/// even index i, or pair(i, j) with i < j.
struct GammaGenerator {
    bool is_gamma;
    std::size_t i, j; // j unused for gamma generators
    int parity;
};

struct GammaBasis {
    SuperDim source;
    std::vector<GammaGenerator> generators; // even generators first
    SuperDim dim;
};

/// Explicit free basis of Gamma on a supermodule of dimension (m|n):
/// gamma(i) for each even i, and pair(i,j) for all i < j.
GammaBasis gamma_basis(SuperDim d);

/// dim Gamma(m|n) = (m + C(m,2) + C(n,2) | m*n).
SuperDim gamma_dim(SuperDim d);

/// Direct-sum law: Gamma(a+b) = Gamma(a) + Gamma(b) + a (x) b.
bool gamma_direct_sum_check(SuperDim a, SuperDim b);

/// dim Gamma(L/L^2): the predicted dimension of the square ideal of L.
SuperDim gamma_of_abelianization(const LieSuperAlgebra& l);

} // namespace lsa

#endif
