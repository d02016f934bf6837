#include "lsa/report.hpp"

#include "lsa/bounds.hpp"
#include "lsa/gamma.hpp"
#include "lsa/superalgebra.hpp"
#include "lsa/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace lsa {

namespace {

struct Checker {
    std::vector<Claim> claims;
    bool pass = true;
    std::ostringstream detail;

    void begin(int n, std::string label) {
        pass = true;
        detail.str("");
        claims.push_back({n, std::move(label), true, ""});
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }
    void expect_dim(const std::string& what, SuperDim got, SuperDim want) {
        expect(got == want, what + " = " + got.str() + ", expected " + want.str());
    }
    void end() {
        claims.back().pass = pass;
        claims.back().detail = detail.str();
    }
};

constexpr std::pair<long, long> kEvenParams[] = {{2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}};

// Claim 1.
void check_h10(Checker& c, unsigned ch) {
    TensorSquareResult ts = tensor_square(heisenberg_even(1, 0, ch));
    c.expect_dim("dim H(1,0)(x)H(1,0)", ts.dim, {6, 0});
    c.expect(ts.quotient.is_abelian(), "H(1,0)(x)H(1,0) not abelian");
}

// Claim 2.
void check_h01(Checker& c, unsigned ch) {
    c.expect_dim("dim H(0,1)(x)H(0,1)", tensor_square(heisenberg_even(0, 1, ch)).dim, {1, 0});
}

// Claim 3.
void check_hodd1(Checker& c, unsigned ch) {
    TensorSquareResult ts = tensor_square(heisenberg_odd(1, ch));
    c.expect_dim("dim H_1(x)H_1", ts.dim, {2, 3});
    c.expect(ts.quotient.is_abelian(), "H_1(x)H_1 not abelian");
}

// Claim 4.
void check_even_family(Checker& c, unsigned ch) {
    for (auto [m, n] : kEvenParams) {
        SuperDim got = tensor_square(heisenberg_even(m, n, ch)).dim;
        c.expect_dim("dim H(" + std::to_string(m) + "," + std::to_string(n) + ") tensor square",
                     got, {4 * m * m + n * n, 4 * m * n});
        c.expect(got.total() == (2 * m + n) * (2 * m + n), "total is not (2m+n)^2");
    }
}

} // namespace

std::vector<Claim> verification_claims() {
    Checker c;

    c.begin(1, "H(1,0)(x)H(1,0) is abelian of dim (6|0)");
    check_h10(c, 0);
    c.end();

    c.begin(2, "H(0,1)(x)H(0,1) has dim (1|0)");
    check_h01(c, 0);
    c.end();

    c.begin(3, "H_1(x)H_1 is abelian of dim (2|3)");
    check_hodd1(c, 0);
    c.end();

    c.begin(4, "dim H(m,n)(x)H(m,n) = (4m^2+n^2 | 4mn)");
    check_even_family(c, 0);
    c.end();

    c.begin(5, "H_m(x)H_m matches its abelianization's module tensor square, total 4m^2");
    for (long m : {2L, 3L}) {
        TensorSquareResult ts = tensor_square(heisenberg_odd(m));
        SuperDim ab{m, m};
        c.expect(ts.dim.total() == 4 * m * m, "total dim != 4m^2 at m=" + std::to_string(m));
        c.expect_dim("dim H_" + std::to_string(m) + " tensor square", ts.dim,
                     module_tensor(ab, ab));
        c.expect(ts.quotient.is_abelian(), "H_m tensor square not abelian");
    }
    c.end();

    c.begin(6, "dim H(m,n)[]H(m,n) = (2m^2+m+n(n-1)/2 | 2mn)");
    for (auto [m, n] : kEvenParams) {
        SuperDim got = square_ideal(tensor_square(heisenberg_even(m, n))).dim;
        c.expect_dim("square ideal of H(" + std::to_string(m) + "," + std::to_string(n) + ")",
                     got, {2 * m * m + m + n * (n - 1) / 2, 2 * m * n});
    }
    c.end();

    c.begin(7, "multiplier dimensions match the closed forms");
    c.expect_dim("M(H(1,0))", multiplier_dim(heisenberg_even(1, 0)), {2, 0});
    c.expect_dim("M(H(0,1))", multiplier_dim(heisenberg_even(0, 1)), {0, 0});
    for (auto [m, n] : kEvenParams)
        c.expect_dim("M(H(" + std::to_string(m) + "," + std::to_string(n) + "))",
                     multiplier_dim(heisenberg_even(m, n)),
                     {2 * m * m - m + n * (n + 1) / 2 - 1, 2 * m * n});
    c.expect_dim("M(H_1)", multiplier_dim(heisenberg_odd(1)), {1, 1});
    for (long m : {2L, 3L})
        c.expect_dim("M(H_" + std::to_string(m) + ")", multiplier_dim(heisenberg_odd(m)),
                     {m * m, m * m - 1});
    c.end();

    std::vector<LieSuperAlgebra> family = heisenberg_family(5);
    c.begin(8, "dim(x) = dim[] + dim^ and dim[] = Gamma(L^ab) on the test family (" +
                   std::to_string(family.size()) + " algebras)");
    c.expect(family.size() >= 15, "test family too small");
    for (const LieSuperAlgebra& l : family) {
        TensorSquareResult ts = tensor_square(l);
        SquareIdeal sq = square_ideal(ts);
        SuperDim ext = exterior_square(l).dim;
        c.expect(ts.dim == sq.dim + ext, "tensor != square + exterior on " + l.name());
        c.expect(sq.dim == gamma_of_abelianization(l), "square != Gamma(L^ab) on " + l.name());
    }
    c.end();

    c.begin(9, "family sweep to dim 7: bound holds, equality exactly on H(1,0)+A(k-3|l)");
    try {
        std::vector<BoundReport> reports = family_sweep(7);
        for (const BoundReport& r : reports) {
            c.expect(r.slack >= 0, "negative slack on " + r.name);
            bool h10_shape = r.classified && !r.classified->odd_center &&
                             r.classified->m == 1 && r.classified->n == 0;
            c.expect(r.equality == h10_shape, "equality/classification mismatch on " + r.name);
        }
        c.expect(std::any_of(reports.begin(), reports.end(),
                             [](const BoundReport& r) { return r.equality; }),
                 "no equality case found");
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    c.end();

    c.begin(10, "direct-sum dimension law on all 21 pairs of the six basic algebras");
    {
        std::vector<LieSuperAlgebra> basics{heisenberg_even(1, 0), heisenberg_even(0, 1),
                                            heisenberg_odd(1),     abelian({1, 0}),
                                            abelian({0, 1}),       abelian({1, 1})};
        for (std::size_t i = 0; i < basics.size(); ++i)
            for (std::size_t j = i; j < basics.size(); ++j) {
                SuperDim got = tensor_square(direct_sum(basics[i], basics[j])).dim;
                SuperDim cross = module_tensor(basics[i].abelianization().dim(),
                                               basics[j].abelianization().dim());
                SuperDim want = tensor_square(basics[i]).dim + tensor_square(basics[j]).dim +
                                cross + cross;
                c.expect(got == want,
                         "direct-sum law fails on " + basics[i].name() + "+" + basics[j].name());
            }
    }
    c.end();

    c.begin(11, "property suite: fixpoint idempotence, relation annihilation, quotient "
                "validation, exterior two-way oracle");
    for (const LieSuperAlgebra& l : heisenberg_family(4)) {
        RelationSystem rs = closure(l);
        BracketTable bt(rs.space);
        c.expect(!closure_sweep(rs, bt), "extra sweep grew relations on " + l.name());
        for (const Vec& r : rs.relations.basis())
            c.expect(is_zero_vec(derived_map(rs.space, r)),
                     "derived map misses a relation on " + l.name());
        TensorSquareResult ts = tensor_square(l);
        c.expect(ts.quotient.validate().empty(), "quotient fails validation on " + l.name());
        SquareIdeal sq = square_ideal(ts);
        TensorSquareResult ext = exterior_square(l);
        c.expect(ext.quotient.validate().empty(),
                 "exterior quotient fails validation on " + l.name());
        c.expect(ext.dim == ts.dim - sq.dim, "exterior oracle split fails on " + l.name());
        c.expect(ts.quotient.quotient(sq.inside).dim() == ext.dim,
                 "exterior via quotient-by-square disagrees on " + l.name());
    }
    c.end();

    c.begin(12, "claims 1-4 reproduce over GF(5) and GF(7)");
    for (unsigned p : {5u, 7u}) {
        Checker sub;
        sub.begin(0, "");
        check_h10(sub, p);
        check_h01(sub, p);
        check_hodd1(sub, p);
        check_even_family(sub, p);
        sub.end();
        c.expect(sub.claims.front().pass,
                 "over GF(" + std::to_string(p) + "): " + sub.claims.front().detail);
    }
    c.end();

    return c.claims;
}

bool all_pass(const std::vector<Claim>& claims) {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

} // namespace lsa
