#pragma once

// Independent reference computations for the test suites.  Everything here
// goes through a different route than the library implementation it checks.

#include <optional>
#include <vector>

#include "eiscong/arith.hpp"

namespace oracles {

using eiscong::Int;
using eiscong::Rat;

// Bernoulli numbers straight from the defining recurrence
//   sum_{j=0}^{k} C(k+1, j) B_j = 0,  B_0 = 1.
inline std::vector<Rat> bernoulli_recurrence(long kmax) {
    std::vector<Rat> B(static_cast<std::size_t>(kmax) + 1);
    B[0] = 1;
    for (long k = 1; k <= kmax; ++k) {
        Rat s(0);
        for (long j = 0; j < k; ++j) {
            Int c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k + 1),
                         static_cast<unsigned long>(j));
            s += Rat(c) * B[static_cast<std::size_t>(j)];
        }
        B[static_cast<std::size_t>(k)] = -s / Rat(k + 1);
    }
    return B;
}

// Divisor power sum by the naive loop.
inline Int sigma_direct(unsigned long e, long n, std::optional<long> exclude_p) {
    Int s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (exclude_p && d % *exclude_p == 0) continue;
        Int dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), e);
        s += dp;
    }
    return s;
}

// The Teichmuller lift by exhaustive search: the unique x in [0, p^W) with
// x = d mod p and x^(p-1) = 1 mod p^W.
inline Int teichmuller_search(long d, long p, int W) {
    Int mod = eiscong::pow_ui(p, static_cast<unsigned long>(W));
    long d0 = ((d % p) + p) % p;
    for (Int x = d0; x < mod; x += p) {
        if (eiscong::pow_mod(x, Int(p - 1), mod) == 1) return x;
    }
    return -1;
}

// (1 - p^(k-1)) B_k / k from a precomputed oracle table.
inline Rat stabilized_zeta(const std::vector<Rat>& B, long k, long p) {
    Rat pk(eiscong::pow_ui(p, static_cast<unsigned long>(k - 1)));
    return (Rat(1) - pk) * B[static_cast<std::size_t>(k)] / Rat(k);
}

}  // namespace oracles
