#include "eiscong/bernoulli.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace eiscong {

namespace {

// Tangent numbers T_1..T_M (coefficients of x^{2n-1}/(2n-1)! in tan x) by the
// Knuth-Buckholtz row recurrence; all-integer.
std::vector<Int> tangent_numbers(long M) {
    std::vector<Int> t(static_cast<std::size_t>(M) + 1);
    if (M >= 1) t[1] = 1;
    for (long k = 2; k <= M; ++k) t[k] = t[k - 1] * (k - 1);
    for (long k = 2; k <= M; ++k) {
        for (long j = k; j <= M; ++j) {
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
        }
    }
    return t;
}

}  // namespace

BernoulliCache::BernoulliCache(long budget) : budget_(budget) {
    if (budget < 4) throw std::invalid_argument("BernoulliCache: budget must be >= 4");
    even_.push_back(Rat(1));  // B_0
}

void BernoulliCache::extend_to(long half) const {
    std::unique_lock lock(mu_);
    long have = static_cast<long>(even_.size()) - 1;
    if (half <= have) return;
    // grow geometrically; the tangent table is recomputed from scratch
    long target = std::min(budget_ / 2, std::max(half, 2 * have));
    std::vector<Int> t = tangent_numbers(target);
    even_.resize(static_cast<std::size_t>(target) + 1);
    Int four_n = 1;
    for (long n = 1; n <= target; ++n) {
        four_n *= 4;
        Rat b(2 * n * t[n], four_n * (four_n - 1));
        b.canonicalize();
        if (n % 2 == 0) b = -b;
        even_[static_cast<std::size_t>(n)] = b;
    }
}

Rat BernoulliCache::get(long k) const {
    if (k < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
    if (k == 0) return Rat(1);
    if (k == 1) return make_rat(-1, 2);
    if (k % 2 == 1) return Rat(0);
    if (k > budget_) {
        throw BudgetError("B_" + std::to_string(k) + " exceeds the exact budget " +
                          std::to_string(budget_) +
                          "; large indexes go through the reduced a0 strategy");
    }
    long half = k / 2;
    {
        std::shared_lock lock(mu_);
        if (half < static_cast<long>(even_.size())) {
            return even_[static_cast<std::size_t>(half)];
        }
    }
    extend_to(half);
    std::shared_lock lock(mu_);
    return even_[static_cast<std::size_t>(half)];
}

Int sigma_pow(unsigned long e, long n, std::optional<long> exclude_p) {
    if (n < 1) throw std::invalid_argument("sigma_pow: n must be >= 1");
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

Residue sigma_pow_mod(const Int& e, long n, long p, int W, bool exclude_p) {
    if (n < 1) throw std::invalid_argument("sigma_pow_mod: n must be >= 1");
    if (e < 0) throw std::invalid_argument("sigma_pow_mod: e must be >= 0");
    Int mod = pow_ui(p, static_cast<unsigned long>(W));
    Int s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (exclude_p && d % p == 0) continue;
        s += pow_mod(Int(d), e, mod);
    }
    return Residue(p, W, s);
}

Regularity regularity(long k, long p, const BernoulliCache& cache) {
    if (k % 2 != 0) throw std::invalid_argument("regularity: k must be even");
    if (!is_odd_prime(p)) throw std::invalid_argument("regularity: p must be an odd prime");
    long j = k % (p - 1);
    if (j < 0) j += p - 1;
    if (j == 0) return Regularity::not_applicable;
    // p = 3 has no even class other than 0; j in {2, ..., p-3} otherwise
    Rat b = cache.get(j);
    if (mpz_divisible_ui_p(b.get_num().get_mpz_t(), static_cast<unsigned long>(p))) {
        return Regularity::irregular;
    }
    return Regularity::regular;
}

bool is_regular(long k, long p, const BernoulliCache& cache) {
    return regularity(k, p, cache) != Regularity::irregular;
}

namespace {

// (1 - p^(k-1)) B_k / k, exactly.
Rat stabilized_zeta(long k, long p, const BernoulliCache& cache) {
    Rat pk(pow_ui(p, static_cast<unsigned long>(k - 1)));
    return (Rat(1) - pk) * cache.get(k) / Rat(k);
}

void check_a0_args(const Int& k, long p, int W) {
    if (!is_odd_prime(p)) throw std::invalid_argument("a0_star: p must be an odd prime");
    if (W < 1) throw std::invalid_argument("a0_star: W must be >= 1");
    if (k < 4 || k % 2 != 0) {
        throw std::invalid_argument("a0_star: k must be even and >= 4");
    }
}

}  // namespace

ScaledResidue a0_star_exact(long k, long p, int W, const BernoulliCache& cache) {
    check_a0_args(Int(k), p, W);
    if (k > cache.budget()) {
        throw BudgetError("a0_star: k = " + std::to_string(k) + " exceeds the budget");
    }
    Rat x = stabilized_zeta(k, p, cache) / Rat(-2);
    return reduce_scaled(x, p, W);
}

ScaledResidue a0_star_reduced(const Int& k, long p, int W,
                              const BernoulliCache& cache, A0Note* note) {
    check_a0_args(k, p, W);
    long vk = vp(Int(2 * k), p).finite();
    // target per the guard rule, then shrink until the reduced index fits
    long m = W + vk + 1;
    long k0 = -1;
    for (; m >= 0; --m) {
        Int modulus = Int(p - 1) * pow_ui(p, static_cast<unsigned long>(m));
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), modulus.get_mpz_t());
        if (r < 4) r += modulus;
        if (r <= cache.budget()) {
            k0 = r.get_si();
            break;
        }
    }
    if (k0 < 0) {
        Int needed = Int(p - 1) * pow_ui(p, static_cast<unsigned long>(W + vk + 1));
        throw PrecisionError("a0_star: no index within budget in the class of k; "
                             "needed modulus (p-1)p^m = " + needed.get_str());
    }
    bool pole = mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(p - 1));
    Rat x;
    if (pole) {
        // subtract / restore the explicit pole term (1 - 1/p)/k around the
        // Kummer-stable remainder
        Rat one_less = Rat(1) - make_rat(1, p);
        Rat corrected = stabilized_zeta(k0, p, cache) - one_less / Rat(k0);
        x = (one_less / Rat(k) + corrected) / Rat(-2);
    } else {
        x = stabilized_zeta(k0, p, cache) / Rat(-2);
    }
    // certification: the surrogate agrees with the true value mod p^D
    long delivered = m + 1 - vk;
    if (x == 0) {
        throw PrecisionError("a0_star: reduced value vanishes at this precision");
    }
    long vx = vp(x, p).finite();
    if (vx + W > delivered) {
        Int needed = Int(p - 1) * pow_ui(p, static_cast<unsigned long>(W + vk + 1));
        throw PrecisionError("a0_star: precision unattainable within budget; "
                             "needed modulus (p-1)p^m = " + needed.get_str());
    }
    if (note) {
        note->strategy = 'B';
        note->k0 = k0;
        note->m = m;
        note->W = W;
    }
    return reduce_scaled(x, p, W);
}

ScaledResidue a0_star(const Int& k, long p, int W, const BernoulliCache& cache,
                      A0Note* note) {
    check_a0_args(k, p, W);
    if (k <= cache.budget()) {
        if (note) {
            note->strategy = 'A';
            note->W = W;
        }
        return a0_star_exact(k.get_si(), p, W, cache);
    }
    return a0_star_reduced(k, p, W, cache, note);
}

}  // namespace eiscong
