#include "eiscong/eisenstein.hpp"

#include <stdexcept>

namespace eiscong {

QSeries g_series(long k, long n_max, const BernoulliCache& cache) {
    if (n_max < 0) throw std::invalid_argument("g_series: n_max must be >= 0");
    QSeries s;
    s.c.assign(static_cast<std::size_t>(n_max) + 1, Rat(0));
    if (k % 2 != 0 || k <= 2) return s;  // zero convention
    Rat bk = cache.get(k);
    s.c[0] = -bk / Rat(2 * k);
    for (long n = 1; n <= n_max; ++n) {
        s.c[static_cast<std::size_t>(n)] =
            Rat(sigma_pow(static_cast<unsigned long>(k - 1), n));
    }
    return s;
}

QSeries e_series(long k, long n_max, const BernoulliCache& cache) {
    if (n_max < 0) throw std::invalid_argument("e_series: n_max must be >= 0");
    if (k < 4 || k % 2 != 0) {
        throw std::invalid_argument("e_series: k must be even and >= 4");
    }
    Rat scale = Rat(-2 * k) / cache.get(k);
    QSeries s;
    s.c.assign(static_cast<std::size_t>(n_max) + 1, Rat(0));
    s.c[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        s.c[static_cast<std::size_t>(n)] =
            scale * Rat(sigma_pow(static_cast<unsigned long>(k - 1), n));
    }
    return s;
}

ModSeries g_star_series_mod(const Int& k, long p, int W, long n_max,
                            const BernoulliCache& cache) {
    if (n_max < 0) throw std::invalid_argument("g_star_series_mod: n_max must be >= 0");
    ModSeries s;
    s.p = p;
    s.W = W;
    s.c.reserve(static_cast<std::size_t>(n_max) + 1);
    s.c.push_back(a0_star(k, p, W, cache));
    for (long n = 1; n <= n_max; ++n) {
        s.c.push_back(ScaledResidue::from_residue(sigma_pow_mod(k - 1, n, p, W, true)));
    }
    return s;
}

namespace {

// Margins are shifted by the p-denominator of the compared coefficients so
// non-p-integral entries (the a_0 of G_k at small weights) are measured on
// their unit parts.
long denominator_shift(Val va, Val vb) {
    Val m = vmin(Val(0), vmin(va, vb));
    return m.finite();
}

Margin shift_margin(Margin m, long shift) {
    if (shift == 0 || m.kind == Margin::Kind::infinite) return m;
    m.v -= shift;
    return m;
}

CongruenceReport finish(std::vector<Margin> margins, long N) {
    CongruenceReport r;
    r.N = N;
    r.pass = true;
    for (const auto& m : margins) {
        if (!m.passes(N)) r.pass = false;
    }
    r.margins = std::move(margins);
    return r;
}

void check_lengths(long a, long b) {
    if (a != b) throw std::invalid_argument("series_congruent: n_max mismatch");
}

}  // namespace

CongruenceReport series_congruent(const QSeries& A, const QSeries& B, long p, long N) {
    check_lengths(A.n_max(), B.n_max());
    if (!is_odd_prime(p)) throw std::invalid_argument("series_congruent: bad prime");
    std::vector<Margin> margins;
    margins.reserve(A.c.size());
    for (std::size_t n = 0; n < A.c.size(); ++n) {
        Rat d = A.c[n] - B.c[n];
        if (d == 0) {
            margins.push_back(Margin::infinite());
            continue;
        }
        long shift = denominator_shift(vp(A.c[n], p), vp(B.c[n], p));
        margins.push_back(Margin::exact(vp(d, p).finite() - shift));
    }
    return finish(std::move(margins), N);
}

CongruenceReport series_congruent(const QSeries& A, const ModSeries& B, long N) {
    check_lengths(A.n_max(), B.n_max());
    if (B.W < N) {
        throw PrecisionError("series_congruent: modular precision W = " +
                             std::to_string(B.W) + " below N = " + std::to_string(N));
    }
    std::vector<Margin> margins;
    margins.reserve(A.c.size());
    for (std::size_t n = 0; n < A.c.size(); ++n) {
        const ScaledResidue& b = B.c[n];
        Val va = vp(A.c[n], B.p);
        long shift = denominator_shift(va, b.val_lower_bound());
        margins.push_back(shift_margin(margin_against_exact(b, A.c[n]), shift));
    }
    return finish(std::move(margins), N);
}

CongruenceReport series_congruent(const ModSeries& A, const QSeries& B, long N) {
    return series_congruent(B, A, N);  // margins are symmetric
}

CongruenceReport series_congruent(const ModSeries& A, const ModSeries& B, long N) {
    check_lengths(A.n_max(), B.n_max());
    if (A.p != B.p) throw std::invalid_argument("series_congruent: mixed primes");
    if (A.W < N || B.W < N) {
        throw PrecisionError("series_congruent: modular precision below N");
    }
    std::vector<Margin> margins;
    margins.reserve(A.c.size());
    for (std::size_t n = 0; n < A.c.size(); ++n) {
        long shift = denominator_shift(A.c[n].val_lower_bound(),
                                       B.c[n].val_lower_bound());
        margins.push_back(shift_margin(margin_of(A.c[n].sub(B.c[n])), shift));
    }
    return finish(std::move(margins), N);
}

}  // namespace eiscong
