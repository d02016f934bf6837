#include "lsa/gamma.hpp"

namespace lsa {

GammaBasis gamma_basis(SuperDim d) {
    std::size_t m = (std::size_t)d.even, t = (std::size_t)d.total();
    std::vector<GammaGenerator> even_gens, odd_gens;
    for (std::size_t i = 0; i < m; ++i)
        even_gens.push_back({true, i, 0, 0});
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
            int parity = ((i >= m) + (j >= m)) % 2;
            (parity == 0 ? even_gens : odd_gens).push_back({false, i, j, parity});
        }
    GammaBasis b;
    b.source = d;
    b.dim = {(long)even_gens.size(), (long)odd_gens.size()};
    b.generators = std::move(even_gens);
    b.generators.insert(b.generators.end(), odd_gens.begin(), odd_gens.end());
    return b;
}

SuperDim gamma_dim(SuperDim d) {
    long m = d.even, n = d.odd;
    return {m + m * (m - 1) / 2 + n * (n - 1) / 2, m * n};
}

bool gamma_direct_sum_check(SuperDim a, SuperDim b) {
    return gamma_dim(a + b) == gamma_dim(a) + gamma_dim(b) + module_tensor(a, b);
}

SuperDim gamma_of_abelianization(const LieSuperAlgebra& l) {
    return gamma_dim(l.dim() - l.derived_subalgebra().dim());
}

} // namespace lsa
