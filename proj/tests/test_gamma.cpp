#include "lsa/gamma.hpp"

#include <doctest.h>

using namespace lsa;

TEST_CASE("gamma dimension on small modules") {
    CHECK(gamma_dim({2, 0}) == SuperDim{3, 0});
    CHECK(gamma_dim({0, 1}) == SuperDim{0, 0});
    CHECK(gamma_dim({2, 1}) == SuperDim{3, 2});
    CHECK(gamma_dim({2, 2}) == SuperDim{4, 4});
    CHECK(gamma_dim({0, 0}) == SuperDim{0, 0});
}

TEST_CASE("gamma basis enumeration matches the dimension formula") {
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 4; ++n) {
            GammaBasis b = gamma_basis({m, n});
            CHECK(b.dim == gamma_dim({m, n}));
            CHECK((long)b.generators.size() == b.dim.total());
            long gammas = 0;
            for (const GammaGenerator& g : b.generators) {
                if (g.is_gamma) {
                    ++gammas;
                    CHECK(g.parity == 0);
                } else {
                    CHECK(g.i < g.j); // no diagonal pair generators
                }
            }
            CHECK(gammas == m);
        }
}

TEST_CASE("purely even and purely odd cases") {
    for (long m = 0; m <= 10; ++m)
        CHECK(gamma_dim({m, 0}) == SuperDim{m * (m + 1) / 2, 0});
    for (long n = 0; n <= 10; ++n)
        CHECK(gamma_dim({0, n}) == SuperDim{n * (n - 1) / 2, 0});
}

TEST_CASE("direct-sum law, exhaustively for total dimension <= 6") {
    for (long ae = 0; ae <= 6; ++ae)
        for (long ao = 0; ae + ao <= 6; ++ao)
            for (long be = 0; ae + ao + be <= 6; ++be)
                for (long bo = 0; ae + ao + be + bo <= 6; ++bo)
                    CHECK(gamma_direct_sum_check({ae, ao}, {be, bo}));
}

TEST_CASE("stated direct-sum instances") {
    CHECK(gamma_dim({1, 0}) + gamma_dim({1, 1}) + module_tensor({1, 0}, {1, 1}) == SuperDim{3, 2});
    CHECK(gamma_dim({2, 0}) + gamma_dim({0, 2}) + module_tensor({2, 0}, {0, 2}) == SuperDim{4, 4});
}

TEST_CASE("gamma of the abelianization") {
    for (auto [m, n] : {std::pair<long, long>{1, 0}, {0, 1}, {2, 1}, {1, 2}})
        CHECK(gamma_of_abelianization(heisenberg_even(m, n)) ==
              SuperDim{2 * m * m + m + n * (n - 1) / 2, 2 * m * n});
    CHECK(gamma_of_abelianization(abelian({1, 0})) == SuperDim{1, 0});
    CHECK(gamma_of_abelianization(heisenberg_odd(1)) == SuperDim{1, 1});
}
