#pragma once

#include <optional>
#include <shared_mutex>
#include <vector>

#include "eiscong/arith.hpp"

namespace eiscong {

// Exact Bernoulli numbers up to a configurable budget.  Values are produced
// from the tangent-number integer recurrence and memoized; extension takes a
// unique lock, lookups a shared one.
class BernoulliCache {
public:
    explicit BernoulliCache(long budget = 4000);

    long budget() const { return budget_; }

    // Exact B_k.  B_1 = -1/2, odd k >= 3 give 0.  Throws BudgetError for
    // k > budget and std::invalid_argument for k < 0.
    Rat get(long k) const;

private:
    void extend_to(long half) const;  // callers hold no lock

    long budget_;
    mutable std::shared_mutex mu_;
    mutable std::vector<Rat> even_;  // even_[i] = B_{2i}
};

// Sum of d^e over the divisors d of n, optionally omitting multiples of a
// prime.  Exact; meant for small n.
Int sigma_pow(unsigned long e, long n, std::optional<long> exclude_p = std::nullopt);

// The same sum reduced mod p^W, one modular exponentiation per divisor.
// Supports huge exponents.  exclude_p drops the divisors divisible by p.
Residue sigma_pow_mod(const Int& e, long n, long p, int W, bool exclude_p);

// Regularity of the pair (k, p): p must not divide the numerator of B_j for
// the even representative j in {2, ..., p-3} of k mod (p-1).  The class
// k = 0 mod (p-1) has no representative in that range; we report it as
// not_applicable rather than guess.
enum class Regularity { regular, irregular, not_applicable };
Regularity regularity(long k, long p, const BernoulliCache& cache);
// not_applicable counts as non-rejecting.
bool is_regular(long k, long p, const BernoulliCache& cache);

// How a0_star produced its value.
struct A0Note {
    char strategy = 'A';   // 'A' exact, 'B' index-reduced
    long k0 = 0;           // reduced index (strategy B)
    long m = 0;            // reduction exponent: k0 = k mod (p-1)p^m
    int W = 0;             // delivered relative digits
};

// a_0(G*_k) = -(1 - p^(k-1)) B_k / (2k) as a ScaledResidue: exact valuation,
// unit correct mod p^W.  k must be even and >= 4.
//
// Strategy A (k within budget) reduces the exact rational.  Strategy B
// replaces k by a congruent index k0 = k mod (p-1)p^m inside the budget,
// using the Kummer-type stability of (1 - p^(k-1)) B_k / k; the branch
// k = 0 mod (p-1) first subtracts the explicit pole term (1 - 1/p)/k.
ScaledResidue a0_star(const Int& k, long p, int W, const BernoulliCache& cache,
                      A0Note* note = nullptr);
ScaledResidue a0_star_exact(long k, long p, int W, const BernoulliCache& cache);
ScaledResidue a0_star_reduced(const Int& k, long p, int W,
                              const BernoulliCache& cache, A0Note* note = nullptr);

}  // namespace eiscong
