#include "eiscong/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace eiscong {

namespace {

constexpr long kCapClamp = 1000000000;  // substitution caps beyond any report

long clamp_add(long a, const Int& b) {
    Int s = Int(a) + b;
    if (s > kCapClamp) return kCapClamp;
    return s.get_si();
}

// Margin of x once only v >= cap is known beyond the computed part.
Margin apply_cap(Margin m, long cap) {
    if (m.kind == Margin::Kind::infinite) {
        return Margin::at_least(cap);
    }
    if (m.v >= cap) return Margin::at_least(cap);
    return m;
}

struct ActiveIndex {
    std::size_t i = 0;
    Int k;
    Rat gp;
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

}  // namespace

VerifyReport verify_at_prime(const CongruenceProblem& problem, long p, long n_max,
                             int guard, const BernoulliCache& cache,
                             bool conditions_certified) {
    if (!is_odd_prime(p)) throw std::invalid_argument("verify: p must be an odd prime");
    if (n_max < 0) throw std::invalid_argument("verify: n_max must be >= 0");
    if (guard < 0) throw std::invalid_argument("verify: guard must be >= 0");
    BoundBreakdown bb = compute_P(problem, cache);
    if (p <= bb.P) {
        throw BoundError("verify: p = " + std::to_string(p) +
                         " does not exceed the bound P = " + std::to_string(bb.P));
    }

    Timer timer;
    const long N = problem.N;
    const int W = static_cast<int>(N) + guard;

    VerifyReport rep;
    rep.p = p;
    rep.N = N;
    rep.n_max = n_max;
    rep.conditions_certified = conditions_certified;

    Rat g0p = problem.g0.eval(p);
    std::vector<ActiveIndex> active;
    bool all_in_budget = true;
    for (std::size_t i = 0; i < problem.size(); ++i) {
        Int k = problem.f[i].eval(p);
        IndexNote note;
        note.i = i;
        note.k = k;
        if (k % 2 != 0 || k <= 2) {
            note.route = "zero";
            rep.notes.push_back(std::move(note));
            continue;
        }
        if (k > cache.budget()) all_in_budget = false;
        active.push_back({i, k, problem.g[i].eval(p)});
        rep.notes.push_back(std::move(note));
    }

    if (all_in_budget) {
        // exact route: every G_{f_i(p)} expanded over Q
        std::vector<QSeries> series;
        series.reserve(active.size());
        for (const auto& a : active) {
            series.push_back(g_series(a.k.get_si(), n_max, cache));
        }
        for (auto& note : rep.notes) {
            if (note.route.empty()) note.route = "exact";
        }
        for (long n = 0; n <= n_max; ++n) {
            Rat delta = (n == 0) ? -g0p : Rat(0);
            for (std::size_t j = 0; j < active.size(); ++j) {
                delta += active[j].gp * series[j].c[static_cast<std::size_t>(n)];
            }
            Margin m = delta == 0 ? Margin::infinite()
                                  : Margin::exact(vp(delta, p).finite());
            rep.margins.push_back(m.truncated(W));
        }
    } else {
        // p-adic route: G* series, valid mod p^N since f_i(p) - 1 >= N
        std::vector<ModSeries> series;
        std::vector<Val> a0_vals;
        series.reserve(active.size());
        for (const auto& a : active) {
            A0Note a0note;
            std::optional<ScaledResidue> a0;
            for (int Wi = W; Wi >= static_cast<int>(N); --Wi) {
                try {
                    a0 = a0_star(a.k, p, Wi, cache, &a0note);
                    break;
                } catch (const PrecisionError&) {
                    if (Wi == static_cast<int>(N)) throw;
                }
            }
            ModSeries s;
            s.p = p;
            s.W = W;
            s.c.push_back(*a0);
            for (long n = 1; n <= n_max; ++n) {
                s.c.push_back(ScaledResidue::from_residue(
                    sigma_pow_mod(a.k - 1, n, p, W, true)));
            }
            a0_vals.push_back(a0->val());
            series.push_back(std::move(s));
            for (auto& note : rep.notes) {
                if (note.i == a.i) {
                    note.route = "star";
                    note.a0 = a0note;
                }
            }
        }
        for (long n = 0; n <= n_max; ++n) {
            ScaledResidue sum = ScaledResidue::exact_zero(p);
            for (std::size_t j = 0; j < active.size(); ++j) {
                sum = sum.add(series[j].c[static_cast<std::size_t>(n)].mul_exact(active[j].gp));
            }
            Rat offset = (n == 0) ? g0p : Rat(0);
            Margin m = margin_against_exact(sum, offset);
            // precision ceiling of the G = G* substitution itself
            long subst_cap = kCapClamp;
            for (std::size_t j = 0; j < active.size(); ++j) {
                Val vg = vp(active[j].gp, p);
                if (vg.is_inf()) continue;
                long c = clamp_add(vg.finite() - 1, active[j].k);
                if (n == 0 && !a0_vals[j].is_inf() && a0_vals[j].finite() < 0) {
                    c += a0_vals[j].finite();
                }
                subst_cap = std::min(subst_cap, c);
            }
            if (subst_cap < kCapClamp) m = apply_cap(m, subst_cap);
            rep.margins.push_back(m.truncated(W));
        }
    }

    rep.pass = std::all_of(rep.margins.begin(), rep.margins.end(),
                           [N](const Margin& m) { return m.passes(N); });
    rep.ms = timer.ms();
    return rep;
}

std::vector<VerifyReport> verify_range(const CongruenceProblem& problem, long p_max,
                                       long n_max, int guard,
                                       const BernoulliCache& cache,
                                       bool conditions_certified, unsigned threads) {
    BoundBreakdown bb = compute_P(problem, cache);
    std::vector<long> primes = primes_in(bb.P, p_max);
    std::vector<VerifyReport> reports(primes.size());

    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t j = start; j < primes.size(); j += stride) {
            try {
                reports[j] = verify_at_prime(problem, primes[j], n_max, guard, cache,
                                             conditions_certified);
            } catch (const std::exception& e) {
                reports[j].p = primes[j];
                reports[j].N = problem.N;
                reports[j].n_max = n_max;
                reports[j].pass = false;
                reports[j].error = e.what();
            }
        }
    };

    if (threads <= 1 || primes.size() <= 1) {
        work(0, 1);
    } else {
        unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(primes.size()));
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
        for (auto& th : pool) th.join();
    }
    return reports;
}

StarPartsReport verify_star_parts(const CongruenceProblem& problem, long p,
                                  long n_max, int guard, const BernoulliCache& cache) {
    if (!is_odd_prime(p)) throw std::invalid_argument("verify: p must be an odd prime");
    BoundBreakdown bb = compute_P(problem, cache);
    if (p <= bb.P) {
        throw BoundError("verify: p = " + std::to_string(p) +
                         " does not exceed the bound P = " + std::to_string(bb.P));
    }
    const long N = problem.N;
    const int W = static_cast<int>(N) + guard;

    StarPartsReport rep;
    rep.p = p;
    rep.N = N;

    std::vector<ActiveIndex> active;
    for (std::size_t i = 0; i < problem.size(); ++i) {
        Int k = problem.f[i].eval(p);
        if (k % 2 != 0 || k <= 2) continue;  // G* vanishes by convention
        active.push_back({i, k, problem.g[i].eval(p)});
    }

    // constant coefficient against g_0(p)
    ScaledResidue s0 = ScaledResidue::exact_zero(p);
    for (const auto& a : active) {
        std::optional<ScaledResidue> a0;
        for (int Wi = W; Wi >= static_cast<int>(N); --Wi) {
            try {
                a0 = a0_star(a.k, p, Wi, cache);
                break;
            } catch (const PrecisionError&) {
                if (Wi == static_cast<int>(N)) throw;
            }
        }
        s0 = s0.add(a0->mul_exact(a.gp));
    }
    rep.a0_margin = margin_against_exact(s0, problem.g0.eval(p)).truncated(W);
    rep.a0_pass = rep.a0_margin.passes(N);

    // non-constant coefficients against 0
    rep.an_pass = true;
    for (long n = 1; n <= n_max; ++n) {
        ScaledResidue s = ScaledResidue::exact_zero(p);
        for (const auto& a : active) {
            s = s.add(ScaledResidue::from_residue(sigma_pow_mod(a.k - 1, n, p, W, true))
                          .mul_exact(a.gp));
        }
        Margin m = margin_of(s).truncated(W);
        if (!m.passes(N)) rep.an_pass = false;
        rep.an_margins.push_back(m);
    }
    rep.pass = rep.a0_pass && rep.an_pass;
    return rep;
}

// ---------------------------------------------------------------------------
// Presets

CongruenceProblem preset_von_staudt(const IntPoly& f) {
    if (f.eval(1) != 0) {
        throw PresetError("von-staudt preset requires f(1) = 0, got f(1) = " +
                          f.eval(1).get_str());
    }
    IntPoly g1 = IntPoly::constant(2) * IntPoly::variable() * f;
    return CongruenceProblem(1, {f}, {RatFunc(g1)}, RatFunc{Rat(1)});
}

CongruenceProblem preset_kummer(const IntPoly& f, const IntPoly& g) {
    if (f == g) throw PresetError("kummer preset requires distinct f and g");
    Int f1 = f.eval(1), g1 = g.eval(1);
    if (f1 != g1 || f1 == 0) {
        throw PresetError("kummer preset requires f(1) = g(1) != 0, got f(1) = " +
                          f1.get_str() + ", g(1) = " + g1.get_str());
    }
    Val d = RatFunc(f - g).vt();
    long N = d.finite() + 1;
    return CongruenceProblem(N, {f, g},
                             {RatFunc{Rat(1)}, RatFunc{Rat(-1)}}, RatFunc{});
}

namespace {

void check_e_common(long k, long p, int r, const BernoulliCache& cache) {
    if (!is_odd_prime(p)) throw PresetError("E-series preset requires an odd prime p");
    if (r < 1) throw PresetError("E-series preset requires r >= 1");
    if (k % 2 != 0 || k < 4) {
        throw PresetError("E-series preset requires even k >= 4");
    }
    if (k < r + 1) {
        throw PresetError("E-series preset requires k >= r + 1");
    }
    if (regularity(k, p, cache) == Regularity::irregular) {
        long j = k % (p - 1);
        throw PresetError("(" + std::to_string(k) + ", " + std::to_string(p) +
                          ") is an irregular pair: " + std::to_string(p) +
                          " divides the numerator of B_" + std::to_string(j));
    }
}

Int e_modulus_step(long p, int r) {
    return Int(p - 1) * pow_ui(p, static_cast<unsigned long>(r - 1));
}

}  // namespace

ESeriesPlan preset_e_one(long k, long p, int r, const BernoulliCache& cache) {
    check_e_common(k, p, r, cache);
    if (!mpz_divisible_p(Int(k).get_mpz_t(), e_modulus_step(p, r).get_mpz_t())) {
        throw PresetError("E_k = 1 preset requires k = 0 mod (p-1)p^(r-1)");
    }
    return ESeriesPlan{"one", k, 0, p, r};
}

ESeriesPlan preset_e_kummer(long k, long l, long p, int r, const BernoulliCache& cache) {
    check_e_common(k, p, r, cache);
    check_e_common(l, p, r, cache);
    if (k == l) throw PresetError("E_k = E_l preset requires distinct k, l");
    if (!mpz_divisible_p(Int(k - l).get_mpz_t(), e_modulus_step(p, r).get_mpz_t())) {
        throw PresetError("E_k = E_l preset requires k = l mod (p-1)p^(r-1)");
    }
    return ESeriesPlan{"kummer", k, l, p, r};
}

Preset build_preset(const std::string& name, const PresetParams& params,
                    const BernoulliCache& cache) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("preset ") + name +
                                             " requires " + what);
    };
    if (name == "von-staudt") {
        need(params.f.has_value(), "an f polynomial");
        return preset_von_staudt(*params.f);
    }
    if (name == "kummer") {
        need(params.f.has_value() && params.g.has_value(), "f and g polynomials");
        return preset_kummer(*params.f, *params.g);
    }
    if (name == "e-one") {
        need(params.k && params.p && params.r, "k, p and r");
        return preset_e_one(*params.k, *params.p, *params.r, cache);
    }
    if (name == "e-kummer") {
        need(params.k && params.l && params.p && params.r, "k, l, p and r");
        return preset_e_kummer(*params.k, *params.l, *params.p, *params.r, cache);
    }
    throw std::invalid_argument("unknown preset: " + name);
}

CongruenceReport run_e_plan(const ESeriesPlan& plan, long n_max,
                            const BernoulliCache& cache) {
    QSeries lhs = e_series(plan.k, n_max, cache);
    QSeries rhs;
    if (plan.kind == "one") {
        rhs.c.assign(static_cast<std::size_t>(n_max) + 1, Rat(0));
        rhs.c[0] = 1;
    } else {
        rhs = e_series(plan.l, n_max, cache);
    }
    return series_congruent(lhs, rhs, plan.p, plan.r);
}

}  // namespace eiscong
