#pragma once

#include <optional>
#include <vector>

#include "eiscong/arith.hpp"

namespace eiscong {

// Element of the weight space Z_p x Z/(p-1): an integer weight k embeds as
// (k mod p^W, k mod (p-1)).
struct Weight {
    Int s_part;
    long u_part;
    static Weight from_integer(const Int& k, long p, int W);
};

// Coefficients of the falling factorial k(k-1)...(k-m+1) as a polynomial in
// k: result[j] is the coefficient of k^j (result[0] = 0 for m >= 1,
// result[m] = 1).
std::vector<Int> stirling_falling(long m);

// Taylor coefficients a_m of the weight expansion
//     a_n(G*_k) = sum_m a_m k^m        (k even >= 4, k = l mod p-1)
// obtained by expanding <d>^k = (1 + p q_d)^k binomially and collecting
// powers of k.  Each coefficient is published mod p^W (absolute).
struct TaylorCoeffs {
    long n = 0;
    long p = 0;
    long l = 0;  // branch, reduced mod p-1
    int W = 0;
    long m_max = 0;
    std::vector<ScaledResidue> coeffs;  // index m = 0..m_max
};

// m_max defaults to ceil(W(p-1)/(p-2)), the order at which the tail
// valuation bound m - m/(p-1) reaches W.
TaylorCoeffs taylor_coeffs(long n, long p, long l, int W,
                           std::optional<long> m_max = std::nullopt);

// sum_m a_m k^m mod p^W; k must be even, >= 4 and in the branch of tc.
ScaledResidue eval_taylor(const TaylorCoeffs& tc, const Int& k);

// Checks v_p(a_m) >= m - m/(p-1) for every m, and >= m where p >= m+2.
// A coefficient known mod p^W certifies a valuation only up to W, so each
// requirement is tested against min(required, W).
struct BoundCheck {
    long m = 0;
    Val observed_lb;       // exact valuation, or the cap for residual zeros
    bool observed_exact = false;
    long required_general = 0;      // ceil(m - m/(p-1))
    std::optional<long> required_small_m;  // m, when p >= m+2
    bool pass = false;
    bool at_cap = false;   // requirement exceeds the certifiable precision
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    bool all_pass = false;
};

BoundReport check_valuation_bounds(const TaylorCoeffs& tc);

}  // namespace eiscong
