#include "eiscong/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "eiscong/parser.hpp"
#include "eiscong/problem_io.hpp"
#include "eiscong/report.hpp"

namespace eiscong {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecision = 3;

struct CommonOpts {
    std::string problem_path;
    std::vector<std::string> f_exprs;
    std::vector<std::string> g_exprs;
    std::string g0_expr = "0";
    long N = 0;
    long n_max = -1;      // unset: problem-file value, then 50
    long p_max = 0;       // unset: P + 100
    long single_p = 0;    // 0: range mode
    int guard = -1;       // unset: problem-file value, then 2
    long budget = 0;      // unset: problem-file value, then 4000
    unsigned threads = 1;
    bool force = false;
    std::string json_path;

    void fill_defaults() {
        if (n_max < 0) n_max = 50;
        if (guard < 0) guard = 2;
        if (budget <= 0) budget = 4000;
    }
};

void add_problem_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--problem", o.problem_path, "problem file");
    cmd->add_option("--f", o.f_exprs, "index polynomial f_i(t) (repeatable)");
    cmd->add_option("--g", o.g_exprs, "coefficient function g_i(t) (repeatable)");
    cmd->add_option("--g0", o.g0_expr, "right-hand side g_0(t)");
    cmd->add_option("--N", o.N, "congruence exponent N");
}

void add_run_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--pmax", o.p_max, "verify primes up to this bound");
    cmd->add_option("--p", o.single_p, "verify a single prime");
    cmd->add_option("--nmax", o.n_max, "q-expansion truncation order");
    cmd->add_option("--guard", o.guard, "extra p-adic digits");
    cmd->add_option("--budget", o.budget, "exact Bernoulli budget");
    cmd->add_option("--threads", o.threads, "worker threads for prime ranges");
    cmd->add_option("--json", o.json_path, "write a JSON report here");
}

CongruenceProblem resolve_problem(CommonOpts& o) {
    if (!o.problem_path.empty()) {
        ProblemFile pf = load_problem_file(o.problem_path);
        if (pf.n_max && o.n_max < 0) o.n_max = *pf.n_max;
        if (pf.p_max && o.p_max == 0) o.p_max = *pf.p_max;
        if (pf.guard && o.guard < 0) o.guard = *pf.guard;
        if (pf.budget && o.budget <= 0) o.budget = *pf.budget;
        o.fill_defaults();
        return build_problem(pf);
    }
    if (o.f_exprs.empty() || o.g_exprs.empty() || o.N == 0) {
        throw std::invalid_argument(
            "either --problem or all of --f/--g/--N must be given");
    }
    o.fill_defaults();
    ProblemFile pf;
    pf.N = o.N;
    pf.f = o.f_exprs;
    pf.g = o.g_exprs;
    pf.g0 = o.g0_expr;
    return build_problem(pf);
}

void write_json(const std::string& path, const Json& doc) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << "\n";
}

void print_conditions(std::ostream& out, const ConditionReport& rep) {
    out << "M  = " << rep.M.str() << "\n";
    out << "S1 = {";
    for (std::size_t i = 0; i < rep.S1.size(); ++i) {
        out << (i ? ", " : "") << rep.S1[i];
    }
    out << "}\n";
    for (const auto& e : rep.entries) {
        out << "C" << e.condition;
        if (e.l) out << " l=" << *e.l;
        if (e.m) out << " m=" << *e.m;
        if (e.vacuous) {
            out << ": vacuous\n";
            continue;
        }
        out << ": v_t = " << e.observed_vt.str() << ", required >= " << e.required
            << (e.pass ? "  [pass]" : "  [FAIL]") << "\n";
    }
    out << "conditions: " << (rep.overall ? "pass" : "FAIL") << "\n";
}

void print_bound(std::ostream& out, const BoundBreakdown& bb) {
    out << "P = " << bb.P << "  (b1=" << bb.b1 << " b2=" << bb.b2 << " b3=" << bb.b3
        << " b4=" << bb.b4 << " b5=" << bb.b5 << ")\n";
}

void print_verify_line(std::ostream& out, const VerifyReport& rep) {
    out << "p = " << rep.p;
    if (rep.error) {
        out << ": ERROR " << *rep.error << "\n";
        return;
    }
    Margin worst = Margin::infinite();
    for (const auto& m : rep.margins) {
        if (worst.kind == Margin::Kind::infinite ||
            (m.kind != Margin::Kind::infinite && m.v < worst.v)) {
            worst = m;
        }
    }
    out << ": " << (rep.pass ? "pass" : "FAIL") << "  (min margin " << worst.str()
        << ", need >= " << rep.N << ")";
    for (const auto& note : rep.notes) {
        if (note.a0 && note.a0->strategy == 'B') {
            out << "  [a0 strategy B at i=" << note.i << ": k0=" << note.a0->k0
                << ", m=" << note.a0->m << ", W=" << note.a0->W << "]";
        }
    }
    out << "\n";
}

struct Timed {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int run_check_conditions(CommonOpts& o, std::ostream& out) {
    Timed timer;
    CongruenceProblem problem = resolve_problem(o);
    BernoulliCache cache(o.budget);
    ConditionReport rep = check_all(problem, cache);
    print_conditions(out, rep);
    Json payload;
    payload["problem"] = json_problem(problem);
    payload["conditions"] = json_conditions(rep);
    write_json(o.json_path, json_document("check-conditions", payload, timer.ms()));
    return rep.overall ? kExitPass : kExitCheckFailed;
}

int run_compute_bound(CommonOpts& o, std::ostream& out) {
    Timed timer;
    CongruenceProblem problem = resolve_problem(o);
    BernoulliCache cache(o.budget);
    BoundBreakdown bb = compute_P(problem, cache);
    print_bound(out, bb);
    Json payload;
    payload["problem"] = json_problem(problem);
    payload["bound"] = json_bound(bb);
    write_json(o.json_path, json_document("compute-bound", payload, timer.ms()));
    return kExitPass;
}

int run_verify(CommonOpts& o, std::ostream& out, bool star_mode) {
    Timed timer;
    CongruenceProblem problem = resolve_problem(o);
    BernoulliCache cache(o.budget);
    ConditionReport cond = check_all(problem, cache);
    BoundBreakdown bb = compute_P(problem, cache);
    print_conditions(out, cond);
    print_bound(out, bb);
    if (!cond.overall) {
        if (!o.force) {
            out << "conditions failed; pass --force to verify anyway\n";
            return kExitCheckFailed;
        }
        out << "WARNING: conditions not certified; empirical check only\n";
    }

    Json payload;
    payload["problem"] = json_problem(problem);
    payload["conditions"] = json_conditions(cond);
    payload["bound"] = json_bound(bb);

    bool all_pass = true;
    if (star_mode) {
        std::vector<long> primes;
        if (o.single_p) {
            primes.push_back(o.single_p);
        } else {
            long pmax = o.p_max ? o.p_max : bb.P + 100;
            primes = primes_in(bb.P, pmax);
        }
        Json parts = Json::array();
        for (long p : primes) {
            StarPartsReport rep = verify_star_parts(problem, p, o.n_max, o.guard, cache);
            out << "p = " << rep.p << ": a0 part "
                << (rep.a0_pass ? "pass" : "FAIL") << " (margin "
                << rep.a0_margin.str() << "), a_n part "
                << (rep.an_pass ? "pass" : "FAIL") << "\n";
            all_pass = all_pass && rep.pass;
            parts.push_back(json_star_parts(rep));
        }
        payload["star_reports"] = std::move(parts);
    } else {
        std::vector<VerifyReport> reports;
        if (o.single_p) {
            reports.push_back(verify_at_prime(problem, o.single_p, o.n_max, o.guard,
                                              cache, cond.overall));
        } else {
            long pmax = o.p_max ? o.p_max : bb.P + 100;
            reports = verify_range(problem, pmax, o.n_max, o.guard, cache,
                                   cond.overall, o.threads);
        }
        Json jreports = Json::array();
        for (const auto& rep : reports) {
            print_verify_line(out, rep);
            all_pass = all_pass && rep.pass && !rep.error;
            jreports.push_back(json_verify_report(rep));
        }
        out << (all_pass ? "all primes pass" : "verification FAILED") << "\n";
        payload["verify"] = Json{{"guard", o.guard},
                                 {"n_max", o.n_max},
                                 {"reports", std::move(jreports)}};
    }
    write_json(o.json_path, json_document(star_mode ? "star-verify" : "verify",
                                          payload, timer.ms()));
    return all_pass ? kExitPass : kExitCheckFailed;
}

int run_taylor(long n, long p, long l, int W, std::optional<long> m_max,
               const std::string& json_path, std::ostream& out) {
    Timed timer;
    TaylorCoeffs tc = taylor_coeffs(n, p, l, W, m_max);
    BoundReport bounds = check_valuation_bounds(tc);
    out << "a_n(G*) weight expansion: n=" << n << " p=" << p << " l=" << tc.l
        << " W=" << W << " m_max=" << tc.m_max << "\n";
    for (std::size_t m = 0; m < tc.coeffs.size(); ++m) {
        out << "  a_" << m << " = " << tc.coeffs[m].str() << "\n";
    }
    out << "valuation bounds: " << (bounds.all_pass ? "pass" : "FAIL") << "\n";
    Json payload = json_taylor(tc, bounds);
    if (!json_path.empty()) {
        write_json(json_path, json_document("taylor", payload, timer.ms()));
    }
    return bounds.all_pass ? kExitPass : kExitCheckFailed;
}

int run_preset(CommonOpts& o, const std::string& name, std::optional<long> k,
               std::optional<long> l, std::optional<long> p, std::optional<int> r,
               std::ostream& out) {
    o.fill_defaults();
    BernoulliCache cache(o.budget);
    PresetParams params;
    if (!o.f_exprs.empty()) {
        auto fp = parse_expression(o.f_exprs.front()).as_int_poly();
        if (!fp) throw std::invalid_argument("--f must be an integer polynomial");
        params.f = *fp;
    }
    if (!o.g_exprs.empty()) {
        auto gp = parse_expression(o.g_exprs.front()).as_int_poly();
        if (!gp) throw std::invalid_argument("--g must be an integer polynomial");
        params.g = *gp;
    }
    params.k = k;
    params.l = l;
    params.p = p;
    params.r = r;
    Preset preset = build_preset(name, params, cache);
    if (std::holds_alternative<ESeriesPlan>(preset)) {
        Timed timer;
        const auto& plan = std::get<ESeriesPlan>(preset);
        CongruenceReport rep = run_e_plan(plan, o.n_max, cache);
        out << "E-series check (" << plan.kind << ", p=" << plan.p << ", r=" << plan.r
            << "): " << (rep.pass ? "pass" : "FAIL") << "\n";
        Json payload;
        payload["plan"] = Json{{"kind", plan.kind}, {"k", plan.k},   {"l", plan.l},
                               {"p", plan.p},       {"r", plan.r}};
        payload["series"] = json_series_report(rep);
        write_json(o.json_path, json_document("preset", payload, timer.ms()));
        return rep.pass ? kExitPass : kExitCheckFailed;
    }
    const auto& problem = std::get<CongruenceProblem>(preset);
    out << "preset " << name << ": N = " << problem.N << ", g = [";
    for (std::size_t i = 0; i < problem.g.size(); ++i) {
        out << (i ? ", " : "") << to_string(problem.g[i]);
    }
    out << "], g0 = " << to_string(problem.g0) << "\n";
    CommonOpts run = o;
    run.problem_path.clear();
    run.f_exprs.clear();
    run.g_exprs.clear();
    // hand the built problem straight to the verifier path
    Timed timer;
    BernoulliCache cache2(o.budget);
    ConditionReport cond = check_all(problem, cache2);
    BoundBreakdown bb = compute_P(problem, cache2);
    print_conditions(out, cond);
    print_bound(out, bb);
    long pmax = o.p_max ? o.p_max : bb.P + 100;
    auto reports = verify_range(problem, pmax, o.n_max, o.guard, cache2,
                                cond.overall, o.threads);
    bool all_pass = cond.overall;
    for (const auto& rep : reports) {
        print_verify_line(out, rep);
        all_pass = all_pass && rep.pass && !rep.error;
    }
    out << (all_pass ? "all primes pass" : "verification FAILED") << "\n";
    Json payload;
    payload["problem"] = json_problem(problem);
    payload["conditions"] = json_conditions(cond);
    payload["bound"] = json_bound(bb);
    Json jreports = Json::array();
    for (const auto& rep : reports) jreports.push_back(json_verify_report(rep));
    payload["verify"] = Json{{"guard", o.guard},
                             {"n_max", o.n_max},
                             {"reports", std::move(jreports)}};
    write_json(o.json_path, json_document("preset", payload, timer.ms()));
    return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact verification of Eisenstein-series congruences with "
                 "polynomial indexes"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* cond_cmd = app.add_subcommand("check-conditions",
                                        "evaluate the t-adic conditions C1-C4");
    add_problem_flags(cond_cmd, o);
    cond_cmd->add_option("--budget", o.budget, "exact Bernoulli budget");
    cond_cmd->add_option("--json", o.json_path, "write a JSON report here");

    auto* bound_cmd = app.add_subcommand("compute-bound",
                                         "compute the effective prime bound P");
    add_problem_flags(bound_cmd, o);
    bound_cmd->add_option("--budget", o.budget, "exact Bernoulli budget");
    bound_cmd->add_option("--json", o.json_path, "write a JSON report here");

    auto* verify_cmd = app.add_subcommand("verify",
                                          "verify the congruence at primes > P");
    add_problem_flags(verify_cmd, o);
    add_run_flags(verify_cmd, o);
    verify_cmd->add_flag("--force", o.force, "verify even if conditions fail");

    auto* star_cmd = app.add_subcommand("star-verify",
                                        "check the two G* sub-congruences separately");
    add_problem_flags(star_cmd, o);
    add_run_flags(star_cmd, o);
    star_cmd->add_flag("--force", o.force, "verify even if conditions fail");

    long t_n = 1, t_p = 5, t_l = 0;
    int t_W = 2;
    long t_mmax = -1;
    auto* taylor_cmd = app.add_subcommand("taylor",
                                          "weight-expansion coefficients of a_n(G*)");
    taylor_cmd->add_option("--n", t_n, "coefficient index n >= 1")->required();
    taylor_cmd->add_option("--p", t_p, "odd prime")->required();
    taylor_cmd->add_option("--l", t_l, "even branch mod p-1")->required();
    taylor_cmd->add_option("--W", t_W, "p-adic precision");
    taylor_cmd->add_option("--mmax", t_mmax, "expansion order override");
    taylor_cmd->add_option("--json", o.json_path, "write a JSON report here");

    std::string preset_name;
    long pk = 0, pl = 0, pp = 0;
    int pr = 0;
    auto* preset_cmd = app.add_subcommand("preset",
                                          "build and run a classical congruence");
    preset_cmd->add_option("--preset", preset_name,
                           "von-staudt | kummer | e-one | e-kummer")->required();
    preset_cmd->add_option("--f", o.f_exprs, "f polynomial");
    preset_cmd->add_option("--g", o.g_exprs, "g polynomial");
    preset_cmd->add_option("--k", pk, "E-series weight k");
    preset_cmd->add_option("--l", pl, "E-series weight l");
    preset_cmd->add_option("--p", pp, "odd prime");
    preset_cmd->add_option("--r", pr, "congruence exponent r");
    preset_cmd->add_option("--pmax", o.p_max, "verify primes up to this bound");
    preset_cmd->add_option("--nmax", o.n_max, "q-expansion truncation order");
    preset_cmd->add_option("--guard", o.guard, "extra p-adic digits");
    preset_cmd->add_option("--budget", o.budget, "exact Bernoulli budget");
    preset_cmd->add_option("--threads", o.threads, "worker threads");
    preset_cmd->add_option("--json", o.json_path, "write a JSON report here");

    std::vector<const char*> argv;
    argv.push_back("eiscong");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitPass;
        }
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (cond_cmd->parsed()) return run_check_conditions(o, out);
        if (bound_cmd->parsed()) return run_compute_bound(o, out);
        if (verify_cmd->parsed()) return run_verify(o, out, /*star_mode=*/false);
        if (star_cmd->parsed()) return run_verify(o, out, /*star_mode=*/true);
        if (taylor_cmd->parsed()) {
            return run_taylor(t_n, t_p, t_l, t_W,
                              t_mmax >= 0 ? std::optional<long>(t_mmax) : std::nullopt,
                              o.json_path, out);
        }
        if (preset_cmd->parsed()) {
            return run_preset(o, preset_name,
                              pk ? std::optional<long>(pk) : std::nullopt,
                              pl ? std::optional<long>(pl) : std::nullopt,
                              pp ? std::optional<long>(pp) : std::nullopt,
                              pr ? std::optional<int>(pr) : std::nullopt, out);
        }
        err << "error: no command\n";
        return kExitInput;
    } catch (const BudgetError& e) {
        err << "budget error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace eiscong
