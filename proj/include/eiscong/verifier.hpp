#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eiscong/bound.hpp"
#include "eiscong/conditions.hpp"
#include "eiscong/eisenstein.hpp"

namespace eiscong {

// Per-index bookkeeping for one prime.
struct IndexNote {
    std::size_t i = 0;
    Int k;                  // f_i(p)
    std::string route;      // "zero" (odd or <= 2 index), "exact", "star"
    std::optional<A0Note> a0;  // set on the star route
};

struct VerifyReport {
    long p = 0;
    long N = 0;
    long n_max = 0;
    bool pass = false;
    bool conditions_certified = true;
    std::vector<Margin> margins;      // coefficient 0..n_max
    std::vector<IndexNote> notes;
    std::optional<std::string> error;  // set when this prime failed to compute
    double ms = 0.0;
};

// Delta(p) = sum_i g_i(p) G_{f_i(p)} - g_0(p) coefficientwise mod p^N, for a
// single prime p > P.  Uses exact q-expansions when every index is within
// the Bernoulli budget, otherwise the p-adic family G* (valid mod p^N since
// f_i(p) > N beyond the bound).  W = N + guard digits are carried; the a_0
// guard degrades per index down to N before the computation gives up.
VerifyReport verify_at_prime(const CongruenceProblem& problem, long p, long n_max,
                             int guard, const BernoulliCache& cache,
                             bool conditions_certified = true);

// All primes in (P, p_max], independently; per-prime failures are recorded
// in the report rather than thrown.
std::vector<VerifyReport> verify_range(const CongruenceProblem& problem, long p_max,
                                       long n_max, int guard,
                                       const BernoulliCache& cache,
                                       bool conditions_certified = true,
                                       unsigned threads = 1);

// The two halves of the congruence over the family G* itself: the constant
// coefficient against g_0(p), and every non-constant coefficient against 0.
struct StarPartsReport {
    long p = 0;
    long N = 0;
    Margin a0_margin;
    std::vector<Margin> an_margins;  // n = 1..n_max
    bool a0_pass = false;
    bool an_pass = false;
    bool pass = false;
};

StarPartsReport verify_star_parts(const CongruenceProblem& problem, long p,
                                  long n_max, int guard, const BernoulliCache& cache);

// ---------------------------------------------------------------------------
// Presets

// Plan for the classical normalized-series congruences, checked directly on
// q-expansions rather than through the polynomial-index machinery:
//   kind "one":    E_k = 1 mod p^r      (k = 0 mod (p-1)p^(r-1))
//   kind "kummer": E_k = E_l mod p^r    (k = l mod (p-1)p^(r-1))
struct ESeriesPlan {
    std::string kind;
    long k = 0;
    long l = 0;  // unused for "one"
    long p = 0;
    int r = 1;
};

using Preset = std::variant<CongruenceProblem, ESeriesPlan>;

CongruenceProblem preset_von_staudt(const IntPoly& f);
CongruenceProblem preset_kummer(const IntPoly& f, const IntPoly& g);
ESeriesPlan preset_e_one(long k, long p, int r, const BernoulliCache& cache);
ESeriesPlan preset_e_kummer(long k, long l, long p, int r, const BernoulliCache& cache);

// name: "von-staudt", "kummer", "e-one", "e-kummer"; the f/g expressions
// feed the first two, the k/l/p/r numbers the E-series plans.
struct PresetParams {
    std::optional<IntPoly> f, g;
    std::optional<long> k, l, p;
    std::optional<int> r;
};
Preset build_preset(const std::string& name, const PresetParams& params,
                    const BernoulliCache& cache);

CongruenceReport run_e_plan(const ESeriesPlan& plan, long n_max,
                            const BernoulliCache& cache);

}  // namespace eiscong
