#include "lsa/bounds.hpp"

#include <stdexcept>

namespace lsa {

long upper_bound(long k, long l, long r, long s) {
    if (k + l < 1 || r + s < 1 || r + s > k + l)
        throw std::invalid_argument("upper_bound: need k+l >= 1 and 1 <= r+s <= k+l");
    return (k + l - (r + s)) * (k + l - 1) + 2;
}

BoundReport check_bound(const LieSuperAlgebra& l) {
    if (l.is_abelian())
        throw std::invalid_argument("check_bound: abelian input");
    if (!l.nilpotency().first)
        throw std::invalid_argument("check_bound: non-nilpotent input");

    BoundReport rep;
    rep.name = l.name();
    rep.dim = l.dim();
    rep.derived = l.derived_subalgebra().dim();
    rep.bound = upper_bound(rep.dim.even, rep.dim.odd, rep.derived.even, rep.derived.odd);
    TensorSquareResult ts = tensor_square(l);
    rep.actual_graded = ts.dim;
    rep.actual = ts.dim.total();
    rep.slack = rep.bound - rep.actual;
    rep.equality = rep.slack == 0;
    if (rep.slack < 0)
        throw std::logic_error("upper bound violated on " + l.name());

    if (rep.derived == SuperDim{1, 0}) {
        rep.classified = recognize_heisenberg_plus_abelian(l);
        long kl1 = rep.dim.total() - 1;
        if (rep.equality) {
            // Equality case must be H(1,0) + A(k-3|l).
            if (!rep.classified || rep.classified->odd_center ||
                rep.classified->m != 1 || rep.classified->n != 0)
                throw std::logic_error("equality case not classified as H(1,0)+A on " + l.name());
        }
        if (rep.classified && !rep.classified->odd_center &&
            (rep.classified->m + rep.classified->n >= 2 ||
             (rep.classified->m == 0 && rep.classified->n == 1))) {
            if (rep.actual != kl1 * kl1)
                throw std::logic_error("expected (k+l-1)^2 on " + l.name());
        }
    } else if (rep.derived == SuperDim{0, 1}) {
        rep.classified = recognize_heisenberg_plus_abelian(l);
    }
    return rep;
}

std::vector<LieSuperAlgebra> heisenberg_family(long max_total_dim, unsigned ch) {
    std::vector<LieSuperAlgebra> out;
    auto with_abelian_tails = [&](const LieSuperAlgebra& h) {
        long rem = max_total_dim - h.dim().total();
        for (long a = 0; a <= rem; ++a)
            for (long b = 0; a + b <= rem; ++b) {
                if (a == 0 && b == 0)
                    out.push_back(h);
                else
                    out.push_back(direct_sum(h, abelian({a, b}, ch)));
            }
    };
    for (long m = 0; 2 * m + 1 <= max_total_dim; ++m)
        for (long n = (m == 0 ? 1 : 0); 2 * m + 1 + n <= max_total_dim; ++n)
            with_abelian_tails(heisenberg_even(m, n, ch));
    for (long m = 1; 2 * m + 1 <= max_total_dim; ++m)
        with_abelian_tails(heisenberg_odd(m, ch));
    return out;
}

std::vector<BoundReport> family_sweep(long max_total_dim, long ceiling, unsigned ch) {
    if (max_total_dim > ceiling)
        throw std::invalid_argument("family_sweep: requested dimension exceeds the ceiling");
    std::vector<BoundReport> reports;
    for (const LieSuperAlgebra& l : heisenberg_family(max_total_dim, ch))
        reports.push_back(check_bound(l)); // throws on negative slack / misclassification
    return reports;
}

} // namespace lsa
