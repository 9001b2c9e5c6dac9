#include "eiscong/bound.hpp"

#include <algorithm>
#include <stdexcept>

namespace eiscong {

std::vector<RatFunc> collect_valuated_functions(const CongruenceProblem& problem,
                                                const BernoulliCache& cache) {
    MS1 ms = compute_M_S1(problem);
    std::vector<RatFunc> out;
    auto push_nonzero = [&out](const ConditionEntry& e) {
        if (!e.vacuous && !e.combination.is_zero()) out.push_back(e.combination);
    };
    push_nonzero(check_c1(problem, cache));
    for (const auto& e : check_c2(problem, ms.M)) push_nonzero(e);
    for (const auto& e : check_c3(problem, ms.M)) push_nonzero(e);
    for (const auto& e : check_c4(problem)) push_nonzero(e);
    return out;
}

namespace {

long to_bound(const Int& x) {
    if (!x.fits_slong_p()) throw std::invalid_argument("bound: contribution out of range");
    return x.get_si();
}

// max(|numerator|, denominator) of a nonzero rational.
long unit_size(const Rat& q) {
    Int n = abs(q.get_num());
    return std::max(to_bound(n), to_bound(q.get_den()));
}

// Least c >= 0 such that f(j) > T for every integer j > c, by a Cauchy root
// bound on f - T followed by a downward scan.
long tail_threshold(const IntPoly& f, long T) {
    IntPoly shifted = f - IntPoly::constant(T);
    Int lead = shifted.leading();
    Int maxabs = 0;
    for (long i = 0; i < shifted.degree(); ++i) {
        Int a = abs(shifted.coeff(static_cast<std::size_t>(i)));
        if (a > maxabs) maxabs = a;
    }
    Int cauchy = 1 + (maxabs + lead - 1) / lead;  // ceil
    long r = to_bound(cauchy);
    for (long j = r; j >= 1; --j) {
        if (f.eval(j) <= T) return j;
    }
    return 0;
}

}  // namespace

BoundBreakdown compute_P(const CongruenceProblem& problem, const BernoulliCache& cache) {
    BoundBreakdown b;
    MS1 ms = compute_M_S1(problem);

    b.b1 = ms.M.is_inf() ? 1 : problem.N - ms.M.finite() + 3;

    long maxT = std::max<long>(3, problem.N);
    for (const auto& fi : problem.f) {
        Int v = abs(fi.eval(1));
        b.b2 = std::max(b.b2, to_bound(v) + 1);
        b.b3 = std::max(b.b3, tail_threshold(fi, maxT));
    }

    for (const auto& gi : problem.g) {
        if (gi.is_zero()) continue;
        b.b4 = std::max(b.b4, unit_size(gi.strip_t().second));
    }

    for (const auto& h : collect_valuated_functions(problem, cache)) {
        b.b5 = std::max(b.b5, unit_size(h.strip_t().second));
    }

    b.P = std::max({b.b1, b.b2, b.b3, b.b4, b.b5, 1L});
    return b;
}

}  // namespace eiscong
