#include "lsa/superalgebra.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lsa;

namespace {

bool has_axiom(const std::vector<Violation>& vs, const std::string& axiom) {
    return std::any_of(vs.begin(), vs.end(),
                       [&](const Violation& v) { return v.axiom == axiom; });
}

} // namespace

TEST_CASE("built-in families validate and have the stated dimensions") {
    for (const LieSuperAlgebra& l :
         {heisenberg_even(1, 0), heisenberg_even(0, 1), heisenberg_even(2, 1),
          heisenberg_odd(1), heisenberg_odd(3), abelian({2, 3})})
        CHECK(l.validate().empty());
    CHECK(heisenberg_even(1, 0).dim() == SuperDim{3, 0});
    CHECK(heisenberg_even(0, 1).dim() == SuperDim{1, 1});
    CHECK(heisenberg_odd(1).dim() == SuperDim{1, 2});
    CHECK(heisenberg_odd(2).dim() == SuperDim{2, 3});
    CHECK_THROWS(heisenberg_even(0, 0));
    CHECK_THROWS(heisenberg_odd(0));
}

TEST_CASE("bracket on the defining relations") {
    LieSuperAlgebra h10 = heisenberg_even(1, 0);
    // [x1, x2] = z
    CHECK(h10.bracket(h10.basis_vector(0), h10.basis_vector(1)) == h10.basis_vector(2));
    LieSuperAlgebra h1 = heisenberg_odd(1);
    // [x1, y1] = z (z is the last odd index)
    CHECK(h1.bracket(h1.basis_vector(0), h1.basis_vector(1)) == h1.basis_vector(2));
    LieSuperAlgebra h01 = heisenberg_even(0, 1);
    // [y1, y1] = z
    CHECK(h01.bracket(h01.basis_vector(1), h01.basis_vector(1)) == h01.basis_vector(0));
    // [u, u] = 0 for even homogeneous u
    Vec u = h10.basis_vector(0);
    axpy(u, Scalar(3), h10.basis_vector(1));
    CHECK(is_zero_vec(h10.bracket(u, u)));
    CHECK_THROWS(h10.bracket(u, Vec{Scalar(1)}));
}

TEST_CASE("validate reports injected violations") {
    SUBCASE("grading: [y1,y1] = y1 on A(2|1)") {
        LieSuperAlgebra l = abelian({2, 1});
        l.set_bracket(2, 2, 2, Scalar::one(0));
        CHECK(has_axiom(l.validate(), "grading"));
    }
    SUBCASE("skew: [e1,e1] = e3 with e1 even") {
        LieSuperAlgebra l = abelian({3, 0});
        l.set_bracket(0, 0, 2, Scalar::one(0));
        CHECK(has_axiom(l.validate(), "skew"));
    }
    SUBCASE("jacobi: H(1,0) with an extra bracket [x1,z] = x1") {
        LieSuperAlgebra l = heisenberg_even(1, 0);
        l.set_bracket(0, 2, 0, Scalar::one(0));
        l.set_bracket(2, 0, 0, -Scalar::one(0));
        std::vector<Violation> vs = l.validate();
        CHECK(has_axiom(vs, "jacobi"));
        CHECK(!has_axiom(vs, "skew"));
    }
}

TEST_CASE("derived subalgebra and center") {
    CHECK(abelian({3, 2}).derived_subalgebra().dim() == SuperDim{0, 0});
    CHECK(abelian({3, 2}).center().dim() == SuperDim{3, 2});
    CHECK(heisenberg_even(2, 1).derived_subalgebra().dim() == SuperDim{1, 0});
    CHECK(heisenberg_even(1, 0).center().dim() == SuperDim{1, 0});
    CHECK(heisenberg_odd(3).derived_subalgebra().dim() == SuperDim{0, 1});
    CHECK(direct_sum(heisenberg_even(1, 0), abelian({2, 1})).center().dim() == SuperDim{3, 1});
}

TEST_CASE("dim L^2 + dim L^ab = dim L on assorted algebras") {
    for (const LieSuperAlgebra& l :
         {heisenberg_even(1, 2), heisenberg_odd(2), direct_sum(heisenberg_odd(1), abelian({1, 1}))})
        CHECK(l.derived_subalgebra().dim() + l.abelianization().dim() == l.dim());
}

TEST_CASE("lower central series and nilpotency") {
    CHECK(heisenberg_even(2, 1).nilpotency() == std::pair<bool, std::size_t>{true, 2});
    CHECK(heisenberg_odd(2).nilpotency() == std::pair<bool, std::size_t>{true, 2});
    CHECK(abelian({2, 2}).nilpotency() == std::pair<bool, std::size_t>{true, 1});

    // [x1, x2] = x2 is solvable but not nilpotent
    LieSuperAlgebra l("aff", {2, 0}, 0);
    l.set_bracket(0, 1, 1, Scalar::one(0));
    l.set_bracket(1, 0, 1, -Scalar::one(0));
    CHECK(l.validate().empty());
    CHECK_FALSE(l.nilpotency().first);
    std::vector<GradedSubspace> series = l.lower_central_series();
    CHECK(series.back().dim() == SuperDim{1, 0}); // stabilizes at span{x2}
}

TEST_CASE("quotients") {
    SUBCASE("H(m,n)/L^2 is abelian of dim (2m|n)") {
        for (auto [m, n] : {std::pair<long, long>{1, 0}, {2, 1}, {0, 2}}) {
            LieSuperAlgebra h = heisenberg_even(m, n);
            LieSuperAlgebra q = h.quotient(h.derived_subalgebra());
            CHECK(q.dim() == SuperDim{2 * m, n});
            CHECK(q.is_abelian());
        }
    }
    SUBCASE("H_m/L^2 is abelian of dim (m|m)") {
        LieSuperAlgebra h = heisenberg_odd(2);
        CHECK(h.abelianization().dim() == SuperDim{2, 2});
        CHECK(h.abelianization().is_abelian());
    }
    SUBCASE("L/0 = L") {
        LieSuperAlgebra h = heisenberg_even(1, 0);
        LieSuperAlgebra q = h.quotient(GradedSubspace(h.dim(), 0));
        CHECK(q.dim() == h.dim());
        CHECK(q.c(0, 1, 2) == Scalar::one(0));
        CHECK(q.c(1, 0, 2) == -Scalar::one(0));
    }
    SUBCASE("non-ideal input is rejected") {
        LieSuperAlgebra h = heisenberg_even(1, 0);
        GradedSubspace line = GradedSubspace::span(h, {h.basis_vector(0)});
        CHECK_THROWS(h.quotient(line));
    }
}

TEST_CASE("direct sums") {
    LieSuperAlgebra s = direct_sum(heisenberg_even(1, 0), abelian({1, 0}));
    CHECK(s.dim() == SuperDim{4, 0});
    CHECK(s.derived_subalgebra().dim() == SuperDim{1, 0});
    CHECK(s.validate().empty());

    CHECK(direct_sum(abelian({1, 2}), abelian({2, 1})).is_abelian());

    LieSuperAlgebra t = direct_sum(heisenberg_even(1, 0), heisenberg_even(0, 1));
    CHECK(t.dim() == SuperDim{4, 1});
    CHECK(t.derived_subalgebra().dim() == SuperDim{2, 0});
    CHECK(t.validate().empty());

    // dimension- and center-additivity
    LieSuperAlgebra a = heisenberg_odd(1), b = heisenberg_even(1, 1);
    CHECK(direct_sum(a, b).dim() == a.dim() + b.dim());
    CHECK(direct_sum(a, b).center().dim() == a.center().dim() + b.center().dim());
}

TEST_CASE("heisenberg recognizer") {
    SUBCASE("stated examples") {
        auto tag = recognize_heisenberg_plus_abelian(
            direct_sum(heisenberg_even(1, 0), abelian({2, 1})));
        REQUIRE(tag);
        CHECK(*tag == HeisenbergTag{false, 1, 0, {2, 1}});

        auto odd = recognize_heisenberg_plus_abelian(heisenberg_odd(2));
        REQUIRE(odd);
        CHECK(*odd == HeisenbergTag{true, 2, 0, {0, 0}});

        CHECK_FALSE(recognize_heisenberg_plus_abelian(abelian({3, 2})));
    }
    SUBCASE("exhaustive over the built family") {
        for (long m = 0; 2 * m <= 6; ++m)
            for (long n = (m == 0 ? 1 : 0); 2 * m + n <= 6; ++n)
                for (long a = 0; a <= 3; ++a)
                    for (long b = 0; a + b <= 3; ++b) {
                        LieSuperAlgebra l = a + b == 0
                                                ? heisenberg_even(m, n)
                                                : direct_sum(heisenberg_even(m, n), abelian({a, b}));
                        auto tag = recognize_heisenberg_plus_abelian(l);
                        REQUIRE(tag);
                        CHECK(*tag == HeisenbergTag{false, m, n, {a, b}});
                    }
    }
    SUBCASE("degenerate shapes return none, not errors") {
        // dim L^2 = (2|0): H(1,0) + H(1,0)
        CHECK_FALSE(recognize_heisenberg_plus_abelian(
            direct_sum(heisenberg_even(1, 0), heisenberg_even(1, 0))));
    }
}
