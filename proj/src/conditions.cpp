#include "eiscong/conditions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace eiscong {

CongruenceProblem::CongruenceProblem(long N_, std::vector<IntPoly> f_,
                                     std::vector<RatFunc> g_, RatFunc g0_)
    : N(N_), f(std::move(f_)), g(std::move(g_)), g0(std::move(g0_)) {
    if (N < 1) throw std::invalid_argument("problem: N must be >= 1");
    if (f.empty() || f.size() != g.size()) {
        throw std::invalid_argument("problem: f and g must have equal length >= 1");
    }
    for (const auto& fi : f) {
        if (fi.degree() < 1) {
            throw std::invalid_argument("problem: every f_i must be non-constant");
        }
        if (fi.leading() <= 0) {
            throw std::invalid_argument(
                "problem: every f_i must have a positive leading coefficient");
        }
    }
}

namespace {

long f_at_one(const IntPoly& f) {
    Int v = f.eval(1);
    if (!v.fits_slong_p()) {
        throw std::invalid_argument("problem: f_i(1) out of range");
    }
    return v.get_si();
}

}  // namespace

MS1 compute_M_S1(const CongruenceProblem& problem) {
    MS1 out;
    out.M = Val::inf();
    std::set<long> s1;
    for (std::size_t i = 0; i < problem.size(); ++i) {
        out.M = vmin(out.M, problem.g[i].vt());
        s1.insert(f_at_one(problem.f[i]));
    }
    out.S1.assign(s1.begin(), s1.end());
    return out;
}

ConditionEntry check_c1(const CongruenceProblem& problem, const BernoulliCache& cache) {
    RatFunc h = problem.g0;
    RatFunc t = RatFunc::variable();
    RatFunc half{make_rat(1, 2)};
    for (std::size_t i = 0; i < problem.size(); ++i) {
        long l = f_at_one(problem.f[i]);
        if (l == 0) {
            // (1/2)(1 - 1/t) g_i / f_i  — exact in Q(t): (t-1) | f_i here
            h = h + half * (RatFunc{Rat(1)} - RatFunc{Rat(1)} / t) *
                        problem.g[i] / RatFunc(problem.f[i]);
        } else if (l >= 4 && l % 2 == 0) {
            Rat coeff = cache.get(l) / Rat(l);
            RatFunc one_minus_t_pow =
                RatFunc{Rat(1)} - t.pow(l - 1);
            h = h + half * RatFunc{coeff} * one_minus_t_pow * problem.g[i];
        }
    }
    ConditionEntry e;
    e.condition = 1;
    e.observed_vt = h.vt();
    e.required = problem.N;
    e.pass = e.observed_vt >= Val(e.required);
    e.vacuous = false;
    e.combination = h;
    return e;
}

namespace {

// Branches of S1 matching a parity/size filter, in ascending order.
std::vector<long> even_branches(const CongruenceProblem& problem, bool low) {
    std::set<long> s;
    for (const auto& fi : problem.f) {
        long l = f_at_one(fi);
        if (l % 2 != 0) continue;
        if (low ? (l <= 2) : (l >= 4)) s.insert(l);
    }
    return {s.begin(), s.end()};
}

ConditionEntry vacuous_entry(int cond, std::optional<long> l, long required) {
    ConditionEntry e;
    e.condition = cond;
    e.l = l;
    e.observed_vt = Val::inf();
    e.required = required;
    e.pass = true;
    e.vacuous = true;
    return e;
}

}  // namespace

std::vector<ConditionEntry> check_c2(const CongruenceProblem& problem, Val M) {
    std::vector<ConditionEntry> out;
    auto branches = even_branches(problem, /*low=*/true);
    if (branches.empty()) {
        out.push_back(vacuous_entry(2, std::nullopt, problem.N));
        return out;
    }
    for (long l : branches) {
        if (M.is_inf() || problem.N - M.finite() < 0) {
            out.push_back(vacuous_entry(2, l, problem.N));
            continue;
        }
        long hi = problem.N - M.finite();
        for (long m = 0; m <= hi; ++m) {
            RatFunc h;
            for (std::size_t i = 0; i < problem.size(); ++i) {
                if (f_at_one(problem.f[i]) != l) continue;
                h = h + problem.g[i] * RatFunc(problem.f[i]).pow(m);
            }
            ConditionEntry e;
            e.condition = 2;
            e.l = l;
            e.m = m;
            e.observed_vt = h.vt();
            e.required = problem.N - m;
            e.pass = e.observed_vt >= Val(e.required);
            e.vacuous = false;
            e.combination = h;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<ConditionEntry> check_c3(const CongruenceProblem& problem, Val M) {
    std::vector<ConditionEntry> out;
    auto branches = even_branches(problem, /*low=*/false);
    if (branches.empty()) {
        out.push_back(vacuous_entry(3, std::nullopt, problem.N));
        return out;
    }
    for (long l : branches) {
        if (M.is_inf() || problem.N - M.finite() < 1) {
            // N - M <= 0 makes this condition automatic
            out.push_back(vacuous_entry(3, l, problem.N));
            continue;
        }
        long hi = problem.N - M.finite();
        for (long m = 1; m <= hi; ++m) {
            RatFunc h;
            Int lm = Int(l);
            mpz_pow_ui(lm.get_mpz_t(), lm.get_mpz_t(), static_cast<unsigned long>(m));
            for (std::size_t i = 0; i < problem.size(); ++i) {
                if (f_at_one(problem.f[i]) != l) continue;
                h = h + problem.g[i] *
                        (RatFunc(problem.f[i]).pow(m) - RatFunc{Rat(lm)});
            }
            ConditionEntry e;
            e.condition = 3;
            e.l = l;
            e.m = m;
            e.observed_vt = h.vt();
            e.required = problem.N - m;
            e.pass = e.observed_vt >= Val(e.required);
            e.vacuous = false;
            e.combination = h;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<ConditionEntry> check_c4(const CongruenceProblem& problem) {
    std::vector<ConditionEntry> out;
    auto branches = even_branches(problem, /*low=*/false);
    if (branches.empty()) {
        out.push_back(vacuous_entry(4, std::nullopt, problem.N));
        return out;
    }
    for (long l : branches) {
        RatFunc h;
        for (std::size_t i = 0; i < problem.size(); ++i) {
            if (f_at_one(problem.f[i]) == l) h = h + problem.g[i];
        }
        ConditionEntry e;
        e.condition = 4;
        e.l = l;
        e.observed_vt = h.vt();
        e.required = problem.N;
        e.pass = e.observed_vt >= Val(e.required);
        e.vacuous = false;
        e.combination = h;
        out.push_back(std::move(e));
    }
    return out;
}

ConditionReport check_all(const CongruenceProblem& problem, const BernoulliCache& cache) {
    ConditionReport rep;
    MS1 ms = compute_M_S1(problem);
    rep.M = ms.M;
    rep.S1 = ms.S1;
    for (std::size_t i = 0; i < problem.size(); ++i) {
        if (f_at_one(problem.f[i]) % 2 != 0) rep.ignored_indexes.push_back(i);
    }
    if (!rep.ignored_indexes.empty()) {
        rep.notes.push_back("indexes with odd f_i(1) generate no condition entries");
    }
    if (!ms.M.is_inf() && problem.N - ms.M.finite() < 0) {
        rep.notes.push_back("N - M < 0: C2 treated as vacuous (extension of the "
                            "automatic-C3 remark)");
    }
    rep.entries.push_back(check_c1(problem, cache));
    auto c2 = check_c2(problem, ms.M);
    auto c3 = check_c3(problem, ms.M);
    auto c4 = check_c4(problem);
    rep.entries.insert(rep.entries.end(), c2.begin(), c2.end());
    rep.entries.insert(rep.entries.end(), c3.begin(), c3.end());
    rep.entries.insert(rep.entries.end(), c4.begin(), c4.end());
    rep.overall = std::all_of(rep.entries.begin(), rep.entries.end(),
                              [](const ConditionEntry& e) { return e.pass; });
    return rep;
}

}  // namespace eiscong
