#include "lsa/tensor.hpp"

#include <doctest.h>

using namespace lsa;

namespace {

Vec symbol(const SymbolSpace& s, std::size_t i, std::size_t j, long coeff = 1) {
    Vec v = zero_vec(s.count(), s.source().characteristic());
    v[s.col(i, j)] = Scalar(coeff, s.source().characteristic());
    return v;
}

} // namespace

TEST_CASE("symbol space enumeration and parity split") {
    LieSuperAlgebra h = heisenberg_even(1, 1); // dim (3|1)
    SymbolSpace s(h);
    CHECK(s.count() == 16);
    CHECK(s.dim() == SuperDim{10, 6}); // 3^2+1^2, 2*3*1
    // even symbols strictly precede odd ones
    for (std::size_t c = 1; c < s.count(); ++c)
        CHECK(s.parity(c - 1) <= s.parity(c));
    auto [i, j] = s.pair_of(s.col(2, 3));
    CHECK(i == 2);
    CHECK(j == 3);
}

TEST_CASE("pair relations on the stated examples") {
    SUBCASE("abelian source yields no relations") {
        CHECK(pair_relations(SymbolSpace(abelian({2, 2}))).empty());
    }
    SUBCASE("H(1,0): e(z,x1) + e(x1,z) is a relation") {
        LieSuperAlgebra h = heisenberg_even(1, 0); // x1=0, x2=1, z=2
        SymbolSpace s(h);
        Subspace r = Subspace::span(pair_relations(s), s.count(), 0);
        Vec expect = symbol(s, 2, 0);
        axpy(expect, Scalar::one(0), symbol(s, 0, 2));
        CHECK(r.contains(expect));
    }
    SUBCASE("H(0,1): e(z,y1) - 2 e(y1,z) is a relation") {
        LieSuperAlgebra h = heisenberg_even(0, 1); // z=0 even, y1=1 odd
        SymbolSpace s(h);
        Subspace r = Subspace::span(pair_relations(s), s.count(), 0);
        Vec expect = symbol(s, 0, 1);
        axpy(expect, Scalar(-2), symbol(s, 1, 0));
        CHECK(r.contains(expect));
    }
    SUBCASE("relation vectors are parity-homogeneous") {
        LieSuperAlgebra h = heisenberg_odd(2);
        SymbolSpace s(h);
        for (const Vec& r : pair_relations(s)) {
            int parity = -1;
            for (std::size_t c = 0; c < s.count(); ++c)
                if (!r[c].is_zero()) {
                    if (parity < 0) parity = s.parity(c);
                    CHECK(s.parity(c) == parity);
                }
        }
    }
}

TEST_CASE("bracket table") {
    LieSuperAlgebra h = heisenberg_even(1, 0);
    SymbolSpace s(h);
    BracketTable bt(s);
    SUBCASE("B(e(x1,x2), e(x1,x2)) = +e(z,z)") {
        const SparseVec& b = bt.on_symbols(s.col(0, 1), s.col(0, 1));
        REQUIRE(b.size() == 1);
        CHECK(b[0].first == s.col(2, 2));
        CHECK(b[0].second == Scalar::one(0));
    }
    SUBCASE("central second index in the left slot kills the bracket") {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t v = 0; v < s.count(); ++v)
                CHECK(bt.on_symbols(s.col(i, 2), v).empty()); // [z, x_i] = 0
    }
    SUBCASE("abelian source has an identically zero table") {
        SymbolSpace sa(abelian({1, 2}));
        BracketTable ba(sa);
        for (std::size_t u = 0; u < sa.count(); ++u)
            for (std::size_t v = 0; v < sa.count(); ++v)
                CHECK(ba.on_symbols(u, v).empty());
    }
}

TEST_CASE("closure rejects non-nilpotent input") {
    LieSuperAlgebra l("aff", {2, 0}, 0);
    l.set_bracket(0, 1, 1, Scalar::one(0));
    l.set_bracket(1, 0, 1, -Scalar::one(0));
    CHECK_THROWS(closure(l));
}

TEST_CASE("tensor squares of the built-in families") {
    SUBCASE("abelian: L(x)L is the module tensor square") {
        for (SuperDim d : {SuperDim{1, 1}, {2, 0}, {2, 1}}) {
            TensorSquareResult ts = tensor_square(abelian(d));
            CHECK(ts.dim == module_tensor(d, d));
            CHECK(ts.quotient.is_abelian());
            CHECK(ts.relations.dim() == 0);
        }
    }
    SUBCASE("H(1,0) gives A(6|0)") {
        TensorSquareResult ts = tensor_square(heisenberg_even(1, 0));
        CHECK(ts.dim == SuperDim{6, 0});
        CHECK(ts.quotient.is_abelian());
    }
    SUBCASE("H(0,1) gives A(1|0)") {
        CHECK(tensor_square(heisenberg_even(0, 1)).dim == SuperDim{1, 0});
    }
    SUBCASE("H_1 gives A(2|3)") {
        TensorSquareResult ts = tensor_square(heisenberg_odd(1));
        CHECK(ts.dim == SuperDim{2, 3});
        CHECK(ts.quotient.is_abelian());
    }
    SUBCASE("H(m,n) with m+n >= 2") {
        CHECK(tensor_square(heisenberg_even(1, 1)).dim == SuperDim{5, 4});
        CHECK(tensor_square(heisenberg_even(2, 0)).dim == SuperDim{16, 0});
        CHECK(tensor_square(heisenberg_even(0, 2)).dim == SuperDim{4, 0});
    }
}

TEST_CASE("exterior squares") {
    CHECK(exterior_square(abelian({1, 0})).dim == SuperDim{0, 0});
    CHECK(exterior_square(heisenberg_even(1, 0)).dim == SuperDim{3, 0});
    CHECK(exterior_square(heisenberg_odd(1)).dim == SuperDim{1, 2});
}

TEST_CASE("square ideal") {
    CHECK(square_ideal(tensor_square(heisenberg_even(1, 0))).dim == SuperDim{3, 0});
    CHECK(square_ideal(tensor_square(heisenberg_even(0, 1))).dim == SuperDim{0, 0});
    CHECK(square_ideal(tensor_square(heisenberg_even(1, 1))).dim == SuperDim{3, 2});
    CHECK(square_ideal(tensor_square(abelian({0, 3}))).dim == SuperDim{3, 0});
    CHECK_THROWS(square_ideal(exterior_square(heisenberg_even(1, 0))));
}

TEST_CASE("module tensor dimension rule") {
    CHECK(module_tensor({2, 0}, {1, 2}) == SuperDim{2, 4});
    CHECK(module_tensor({0, 1}, {4, 7}) == SuperDim{7, 4});
    CHECK(module_tensor({1, 1}, {1, 1}) == SuperDim{2, 2});
}

TEST_CASE("multiplier dimensions") {
    CHECK(multiplier_dim(heisenberg_even(1, 0)) == SuperDim{2, 0});
    CHECK(multiplier_dim(heisenberg_even(0, 1)) == SuperDim{0, 0});
    CHECK(multiplier_dim(heisenberg_even(1, 1)) == SuperDim{1, 2});
    CHECK(multiplier_dim(heisenberg_odd(2)) == SuperDim{4, 3});
}

TEST_CASE("central quotient inequality") {
    LieSuperAlgebra h10 = heisenberg_even(1, 0);
    CHECK(central_quotient_inequality(h10, h10.derived_subalgebra()));
    LieSuperAlgebra h01 = heisenberg_even(0, 1);
    CHECK(central_quotient_inequality(h01, h01.derived_subalgebra()));
    LieSuperAlgebra s = direct_sum(heisenberg_even(1, 0), abelian({1, 0}));
    CHECK(central_quotient_inequality(s, s.derived_subalgebra()));
    // N must be one-dimensional and central
    LieSuperAlgebra hh = direct_sum(heisenberg_even(1, 0), heisenberg_even(1, 0));
    CHECK_THROWS(central_quotient_inequality(hh, hh.derived_subalgebra()));
}

TEST_CASE("quotient grading matches symbol parities") {
    TensorSquareResult ts = tensor_square(heisenberg_odd(1));
    // (2|3): two even and three odd basis classes, evens first by construction
    CHECK(ts.quotient.dim() == SuperDim{2, 3});
    CHECK(ts.quotient.validate().empty());
}
