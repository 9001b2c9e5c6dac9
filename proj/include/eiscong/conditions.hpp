#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eiscong/bernoulli.hpp"
#include "eiscong/polyfield.hpp"

namespace eiscong {

// One instance of the congruence problem:
//   sum_i g_i(p) G_{f_i(p)} = g_0(p)  mod p^N   for primes p > P.
struct CongruenceProblem {
    long N;
    std::vector<IntPoly> f;
    std::vector<RatFunc> g;
    RatFunc g0;

    CongruenceProblem(long N, std::vector<IntPoly> f, std::vector<RatFunc> g,
                      RatFunc g0);
    std::size_t size() const { return f.size(); }
};

// M = min_i v_t(g_i) (inf when every g_i = 0) and S1 = {f_i(1)}.
struct MS1 {
    Val M;
    std::vector<long> S1;  // sorted, deduplicated
};
MS1 compute_M_S1(const CongruenceProblem& problem);

struct ConditionEntry {
    int condition;           // 1..4
    std::optional<long> l;   // branch f_i(1) = l, where the condition has one
    std::optional<long> m;
    Val observed_vt;
    long required;
    bool pass;
    bool vacuous;
    RatFunc combination;     // the valuated function itself (zero if vacuous)
};

struct ConditionReport {
    Val M;
    std::vector<long> S1;
    std::vector<ConditionEntry> entries;   // sorted by (condition, l, m)
    std::vector<std::size_t> ignored_indexes;  // i with f_i(1) odd
    std::vector<std::string> notes;
    bool overall = false;
};

ConditionEntry check_c1(const CongruenceProblem& problem, const BernoulliCache& cache);
std::vector<ConditionEntry> check_c2(const CongruenceProblem& problem, Val M);
std::vector<ConditionEntry> check_c3(const CongruenceProblem& problem, Val M);
std::vector<ConditionEntry> check_c4(const CongruenceProblem& problem);

ConditionReport check_all(const CongruenceProblem& problem, const BernoulliCache& cache);

}  // namespace eiscong
