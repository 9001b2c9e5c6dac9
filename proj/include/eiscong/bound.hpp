#pragma once

#include "eiscong/conditions.hpp"

namespace eiscong {

// The effective prime bound P and its per-rule contributions:
//   b1: N - M + 3
//   b2: max |f_i(1)| + 1
//   b3: least threshold beyond which every f_i exceeds max{3, N}
//   b4: numerators/denominators of the leading units of the g_i at t = 0
//   b5: the same over every valuated function appearing in C1-C4
struct BoundBreakdown {
    long b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0;
    long P = 1;
};

// The finite list of nonzero Q(t) combinations whose t-adic valuation the
// conditions constrain, in C1, C2, C3, C4 order.
std::vector<RatFunc> collect_valuated_functions(const CongruenceProblem& problem,
                                                const BernoulliCache& cache);

BoundBreakdown compute_P(const CongruenceProblem& problem, const BernoulliCache& cache);

}  // namespace eiscong
