#include "eiscong/padic_family.hpp"

#include <stdexcept>

namespace eiscong {

Weight Weight::from_integer(const Int& k, long p, int W) {
    Weight w;
    Int mod = pow_ui(p, static_cast<unsigned long>(W));
    mpz_fdiv_r(w.s_part.get_mpz_t(), k.get_mpz_t(), mod.get_mpz_t());
    w.u_part = static_cast<long>(mpz_fdiv_ui(k.get_mpz_t(),
                                             static_cast<unsigned long>(p - 1)));
    return w;
}

std::vector<Int> stirling_falling(long m) {
    if (m < 1) throw std::invalid_argument("stirling_falling: m must be >= 1");
    // multiply out (k)(k-1)...(k-m+1)
    std::vector<Int> c{Int(0), Int(1)};  // k
    for (long i = 1; i < m; ++i) {
        std::vector<Int> next(c.size() + 1, Int(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= Int(i) * c[j];
        }
        c = std::move(next);
    }
    return c;
}

namespace {

long vp_factorial(long M, long p) {
    long v = 0;
    for (long q = p; q <= M; q *= p) v += M / q;
    return v;
}

long default_m_max(long p, int W) {
    // smallest m with m(p-2)/(p-1) >= W
    return (W * (p - 1) + (p - 2) - 1) / (p - 2);
}

}  // namespace

TaylorCoeffs taylor_coeffs(long n, long p, long l, int W, std::optional<long> m_max_opt) {
    if (n < 1) throw std::invalid_argument("taylor_coeffs: n must be >= 1");
    if (!is_odd_prime(p)) throw std::invalid_argument("taylor_coeffs: p must be an odd prime");
    if (W < 1) throw std::invalid_argument("taylor_coeffs: W must be >= 1");
    if (l % 2 != 0) throw std::invalid_argument("taylor_coeffs: branch l must be even");

    TaylorCoeffs tc;
    tc.n = n;
    tc.p = p;
    tc.l = ((l % (p - 1)) + (p - 1)) % (p - 1);
    tc.W = W;
    tc.m_max = m_max_opt.value_or(default_m_max(p, W));
    if (tc.m_max < default_m_max(p, W)) {
        throw std::invalid_argument(
            "taylor_coeffs: m_max too small for the tail bound m - m/(p-1) >= W");
    }
    long M_top = tc.m_max;

    // guard digits cover the division by M! below
    int Wg = W + static_cast<int>((M_top + (p - 1) - 1) / (p - 1)) + 1;
    Int mod_g = pow_ui(p, static_cast<unsigned long>(Wg));

    // c_M = sum over p-coprime divisors d of q_d^M d^{-1} omega(d)^l (mod p^Wg)
    std::vector<Int> cM(static_cast<std::size_t>(M_top) + 1, Int(0));
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0 || d % p == 0) continue;
        Int qd = angle_and_q(Int(d), p, Wg).second.value();
        Int base = (inv_mod(Int(d), mod_g) *
                    pow_mod(teichmuller(Int(d), p, Wg).value(), Int(tc.l), mod_g)) % mod_g;
        Int qpow = 1;
        for (long M = 0; M <= M_top; ++M) {
            cM[static_cast<std::size_t>(M)] =
                (cM[static_cast<std::size_t>(M)] + base * qpow) % mod_g;
            qpow = (qpow * qd) % mod_g;
        }
    }

    // falling-factorial coefficient table
    std::vector<std::vector<Int>> b(static_cast<std::size_t>(M_top) + 1);
    for (long M = 1; M <= M_top; ++M) b[static_cast<std::size_t>(M)] = stirling_falling(M);

    tc.coeffs.reserve(static_cast<std::size_t>(M_top) + 1);
    for (long m = 0; m <= M_top; ++m) {
        Int acc = 0;
        if (m == 0) {
            acc = cM[0];  // only the M = 0 term has a constant part
        } else {
            for (long M = m; M <= M_top; ++M) {
                long e = vp_factorial(M, p);
                Int fact;
                mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(M));
                Int unit_fact = fact / pow_ui(p, static_cast<unsigned long>(e));
                Int term = pow_ui(p, static_cast<unsigned long>(M - e)) %
                           mod_g;
                term = (term * (b[static_cast<std::size_t>(M)][static_cast<std::size_t>(m)] % mod_g)) % mod_g;
                term = (term * cM[static_cast<std::size_t>(M)]) % mod_g;
                term = (term * inv_mod(unit_fact, mod_g)) % mod_g;
                acc = (acc + term) % mod_g;
            }
        }
        tc.coeffs.push_back(ScaledResidue::from_residue(Residue(p, W, acc)));
    }
    return tc;
}

ScaledResidue eval_taylor(const TaylorCoeffs& tc, const Int& k) {
    if (k < 4 || k % 2 != 0) {
        throw std::invalid_argument("eval_taylor: k must be even and >= 4");
    }
    long kl = static_cast<long>(mpz_fdiv_ui(k.get_mpz_t(),
                                            static_cast<unsigned long>(tc.p - 1)));
    if (kl != tc.l) {
        throw WrongBranchError("eval_taylor: weight " + k.get_str() +
                               " lies in branch " + std::to_string(kl) +
                               ", coefficients are for branch " + std::to_string(tc.l));
    }
    Int mod = pow_ui(tc.p, static_cast<unsigned long>(tc.W));
    Int kr;
    mpz_fdiv_r(kr.get_mpz_t(), k.get_mpz_t(), mod.get_mpz_t());
    Int acc = 0;
    Int kpow = 1;
    for (const auto& a : tc.coeffs) {
        acc = (acc + a.residue_mod(tc.W) * kpow) % mod;
        kpow = (kpow * kr) % mod;
    }
    return ScaledResidue::from_residue(Residue(tc.p, tc.W, acc));
}

BoundReport check_valuation_bounds(const TaylorCoeffs& tc) {
    BoundReport rep;
    rep.all_pass = true;
    for (long m = 0; m < static_cast<long>(tc.coeffs.size()); ++m) {
        const ScaledResidue& a = tc.coeffs[static_cast<std::size_t>(m)];
        BoundCheck chk;
        chk.m = m;
        chk.required_general = m - m / (tc.p - 1);  // = ceil(m - m/(p-1))
        if (tc.p >= m + 2) chk.required_small_m = m;
        if (a.is_exact_zero()) {
            chk.observed_lb = Val::inf();
            chk.observed_exact = true;
        } else if (a.is_capped_zero()) {
            chk.observed_lb = a.cap();
            chk.observed_exact = false;
        } else {
            chk.observed_lb = a.val();
            chk.observed_exact = true;
        }
        long needed = chk.required_general;
        if (chk.required_small_m) needed = std::max(needed, *chk.required_small_m);
        long certifiable = std::min<long>(needed, tc.W);
        chk.at_cap = needed > tc.W;
        chk.pass = chk.observed_lb >= Val(certifiable);
        if (!chk.pass) rep.all_pass = false;
        rep.checks.push_back(chk);
    }
    return rep;
}

}  // namespace eiscong
