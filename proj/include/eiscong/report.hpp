#pragma once

#include <json.hpp>

#include "eiscong/bound.hpp"
#include "eiscong/padic_family.hpp"
#include "eiscong/verifier.hpp"

namespace eiscong {

// JSON report fragments; keys come out sorted so identical inputs give
// byte-identical documents.  Timing lives under the separate "timing" key
// at the document root and never inside the comparison sections.
using Json = nlohmann::json;

Json json_margin(const Margin& m);  // number, ">=k" or "inf"
Json json_problem(const CongruenceProblem& problem);
Json json_conditions(const ConditionReport& rep);
Json json_bound(const BoundBreakdown& bb);
Json json_verify_report(const VerifyReport& rep);
Json json_star_parts(const StarPartsReport& rep);
Json json_series_report(const CongruenceReport& rep);
Json json_taylor(const TaylorCoeffs& tc, const BoundReport& bounds);

// Wraps a command's payload with the schema version.
Json json_document(const std::string& command, Json payload, double total_ms);

}  // namespace eiscong
