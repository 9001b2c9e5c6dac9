#pragma once

#include <vector>

#include "eiscong/bernoulli.hpp"

namespace eiscong {

// Truncated q-expansion with exact rational coefficients, indices 0..n_max.
struct QSeries {
    std::vector<Rat> c;
    long n_max() const { return static_cast<long>(c.size()) - 1; }
};

// Truncated q-expansion with coefficients known to bounded p-adic precision.
struct ModSeries {
    long p = 0;
    int W = 0;
    std::vector<ScaledResidue> c;
    long n_max() const { return static_cast<long>(c.size()) - 1; }
};

// G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n for even k >= 4; the all-zero
// series for every other integer k (the zero convention).
QSeries g_series(long k, long n_max, const BernoulliCache& cache);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, even k >= 4.
QSeries e_series(long k, long n_max, const BernoulliCache& cache);

// The p-adic series G*_k mod p^W: a_0 through a0_star, a_n = sigma*_{k-1}(n).
ModSeries g_star_series_mod(const Int& k, long p, int W, long n_max,
                            const BernoulliCache& cache);

// Coefficientwise congruence A = B mod p^N.
//
// The margin at each index is v_p(A_n - B_n), measured relative to the
// p-denominator of the inputs: when a coefficient fails to be p-integral the
// difference is shifted by min(0, v_p(A_n), v_p(B_n)) so that series with
// bounded p-denominators can still be compared at full strength.
struct CongruenceReport {
    long N = 0;
    std::vector<Margin> margins;
    bool pass = false;
};

CongruenceReport series_congruent(const QSeries& A, const QSeries& B, long p, long N);
CongruenceReport series_congruent(const QSeries& A, const ModSeries& B, long N);
CongruenceReport series_congruent(const ModSeries& A, const QSeries& B, long N);
CongruenceReport series_congruent(const ModSeries& A, const ModSeries& B, long N);

}  // namespace eiscong
