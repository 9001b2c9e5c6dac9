#include "eiscong/report.hpp"

#include "eiscong/parser.hpp"

namespace eiscong {

Json json_margin(const Margin& m) {
    switch (m.kind) {
        case Margin::Kind::infinite: return "inf";
        case Margin::Kind::at_least: return ">=" + std::to_string(m.v);
        default: return m.v;
    }
}

Json json_problem(const CongruenceProblem& problem) {
    Json j;
    j["N"] = problem.N;
    Json f = Json::array(), g = Json::array();
    for (const auto& fi : problem.f) f.push_back(to_string(fi));
    for (const auto& gi : problem.g) g.push_back(to_string(gi));
    j["f"] = std::move(f);
    j["g"] = std::move(g);
    j["g0"] = to_string(problem.g0);
    return j;
}

Json json_conditions(const ConditionReport& rep) {
    Json j;
    j["M"] = rep.M.is_inf() ? Json("inf") : Json(rep.M.finite());
    j["S1"] = rep.S1;
    j["overall"] = rep.overall;
    j["ignored_indexes"] = rep.ignored_indexes;
    j["notes"] = rep.notes;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["condition"] = "C" + std::to_string(e.condition);
        je["l"] = e.l ? Json(*e.l) : Json(nullptr);
        je["m"] = e.m ? Json(*e.m) : Json(nullptr);
        je["vt"] = e.observed_vt.is_inf() ? Json("inf") : Json(e.observed_vt.finite());
        je["required"] = e.required;
        je["pass"] = e.pass;
        je["vacuous"] = e.vacuous;
        je["combination"] = to_string(e.combination);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json json_bound(const BoundBreakdown& bb) {
    Json j;
    j["b1"] = bb.b1;
    j["b2"] = bb.b2;
    j["b3"] = bb.b3;
    j["b4"] = bb.b4;
    j["b5"] = bb.b5;
    j["P"] = bb.P;
    return j;
}

Json json_verify_report(const VerifyReport& rep) {
    Json j;
    j["p"] = rep.p;
    j["N"] = rep.N;
    j["n_max"] = rep.n_max;
    j["pass"] = rep.pass;
    j["conditions_certified"] = rep.conditions_certified;
    if (rep.error) {
        j["error"] = *rep.error;
        return j;
    }
    Json margins = Json::array();
    for (const auto& m : rep.margins) margins.push_back(json_margin(m));
    j["margins"] = std::move(margins);
    Json notes = Json::array();
    for (const auto& note : rep.notes) {
        Json jn;
        jn["i"] = note.i;
        jn["k"] = note.k.get_str();
        jn["route"] = note.route;
        if (note.a0) {
            Json ja;
            ja["strategy"] = std::string(1, note.a0->strategy);
            ja["W"] = note.a0->W;
            if (note.a0->strategy == 'B') {
                ja["k0"] = note.a0->k0;
                ja["m"] = note.a0->m;
            }
            jn["a0"] = std::move(ja);
        }
        notes.push_back(std::move(jn));
    }
    j["indexes"] = std::move(notes);
    return j;
}

Json json_star_parts(const StarPartsReport& rep) {
    Json j;
    j["p"] = rep.p;
    j["N"] = rep.N;
    j["a0_margin"] = json_margin(rep.a0_margin);
    Json an = Json::array();
    for (const auto& m : rep.an_margins) an.push_back(json_margin(m));
    j["an_margins"] = std::move(an);
    j["a0_pass"] = rep.a0_pass;
    j["an_pass"] = rep.an_pass;
    j["pass"] = rep.pass;
    return j;
}

Json json_series_report(const CongruenceReport& rep) {
    Json j;
    j["N"] = rep.N;
    j["pass"] = rep.pass;
    Json margins = Json::array();
    for (const auto& m : rep.margins) margins.push_back(json_margin(m));
    j["margins"] = std::move(margins);
    return j;
}

Json json_taylor(const TaylorCoeffs& tc, const BoundReport& bounds) {
    Json j;
    j["n"] = tc.n;
    j["p"] = tc.p;
    j["l"] = tc.l;
    j["W"] = tc.W;
    j["m_max"] = tc.m_max;
    Json coeffs = Json::array();
    for (const auto& a : tc.coeffs) coeffs.push_back(a.str());
    j["coeffs"] = std::move(coeffs);
    Json checks = Json::array();
    for (const auto& c : bounds.checks) {
        Json jc;
        jc["m"] = c.m;
        jc["observed"] = (c.observed_exact ? "" : ">=") +
                         (c.observed_lb.is_inf() ? std::string("inf")
                                                 : std::to_string(c.observed_lb.finite()));
        jc["required"] = c.required_general;
        if (c.required_small_m) jc["required_small_m"] = *c.required_small_m;
        jc["pass"] = c.pass;
        jc["at_cap"] = c.at_cap;
        checks.push_back(std::move(jc));
    }
    j["bounds"] = std::move(checks);
    j["bounds_pass"] = bounds.all_pass;
    return j;
}

Json json_document(const std::string& command, Json payload, double total_ms) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["result"] = std::move(payload);
    doc["timing"] = Json{{"total_ms", total_ms}};
    return doc;
}

}  // namespace eiscong
