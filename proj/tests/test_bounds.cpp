#include "lsa/bounds.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lsa;

TEST_CASE("upper bound arithmetic") {
    CHECK(upper_bound(3, 0, 1, 0) == 6);
    CHECK(upper_bound(5, 0, 1, 0) == 18);
    CHECK(upper_bound(4, 1, 1, 1) == 14);
    CHECK_THROWS(upper_bound(0, 0, 0, 0));
    CHECK_THROWS(upper_bound(2, 0, 0, 0));
    CHECK_THROWS(upper_bound(2, 0, 2, 1));
}

TEST_CASE("check_bound on the stated cases") {
    SUBCASE("H(1,0): equality, classified as H(1,0)") {
        BoundReport r = check_bound(heisenberg_even(1, 0));
        CHECK(r.bound == 6);
        CHECK(r.actual == 6);
        CHECK(r.equality);
        REQUIRE(r.classified);
        CHECK(*r.classified == HeisenbergTag{false, 1, 0, {0, 0}});
    }
    SUBCASE("H(1,0)+A(1|0): equality at 11") {
        BoundReport r = check_bound(direct_sum(heisenberg_even(1, 0), abelian({1, 0})));
        CHECK(r.bound == 11);
        CHECK(r.actual == 11);
        CHECK(r.equality);
    }
    SUBCASE("H(1,1): strict, actual (k+l-1)^2") {
        BoundReport r = check_bound(heisenberg_even(1, 1));
        CHECK(r.bound == 11);
        CHECK(r.actual == 9);
        CHECK_FALSE(r.equality);
    }
    SUBCASE("H_1: strict at 5 < 6") {
        BoundReport r = check_bound(heisenberg_odd(1));
        CHECK(r.bound == 6);
        CHECK(r.actual == 5);
        CHECK_FALSE(r.equality);
    }
    SUBCASE("rejects abelian and non-nilpotent input") {
        CHECK_THROWS(check_bound(abelian({2, 2})));
        LieSuperAlgebra l("aff", {2, 0}, 0);
        l.set_bracket(0, 1, 1, Scalar::one(0));
        l.set_bracket(1, 0, 1, -Scalar::one(0));
        CHECK_THROWS(check_bound(l));
    }
}

TEST_CASE("family sweep") {
    SUBCASE("ceiling 3: exactly one equality case, H(1,0)") {
        std::vector<BoundReport> rs = family_sweep(3);
        long equalities = std::count_if(rs.begin(), rs.end(),
                                        [](const BoundReport& r) { return r.equality; });
        CHECK(equalities == 1);
        auto it = std::find_if(rs.begin(), rs.end(),
                               [](const BoundReport& r) { return r.equality; });
        REQUIRE(it != rs.end());
        CHECK(it->dim == SuperDim{3, 0});
    }
    SUBCASE("ceiling 4: slack nonnegative everywhere") {
        for (const BoundReport& r : family_sweep(4)) {
            CHECK(r.slack >= 0);
            REQUIRE(r.classified); // the sweep family always recognizes itself
        }
    }
    SUBCASE("ceiling 0 is empty, above the configured ceiling rejected") {
        CHECK(family_sweep(0).empty());
        CHECK_THROWS(family_sweep(8));
        CHECK(family_sweep(3, 3).size() == family_sweep(3).size()); // explicit ceiling
    }
}

TEST_CASE("proof-case dimension identities within the sweep") {
    for (const BoundReport& r : family_sweep(5)) {
        long kl1 = r.dim.total() - 1;
        REQUIRE(r.classified);
        if (!r.classified->odd_center) {
            long m = r.classified->m, n = r.classified->n;
            if (m + n >= 2 || (m == 0 && n == 1))
                CHECK(r.actual == kl1 * kl1); // proof cases (ii)-(iii)
        } else {
            CHECK(r.actual <= kl1 * kl1 + 2); // odd-center case
        }
    }
}
