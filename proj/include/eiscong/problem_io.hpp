#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eiscong/conditions.hpp"

namespace eiscong {

// Flat key/value problem document:
//
//   # Kummer pair
//   N  = 2
//   f  = [t + 3, t^3 + 3]
//   g  = [1, -1]
//   g0 = 0
//   nmax = 30
//   pmax = 31
//
// '#' starts a comment; arrays are bracketed comma lists of expressions.
struct ProblemFile {
    long N = 0;
    std::vector<std::string> f;
    std::vector<std::string> g;
    std::string g0 = "0";
    std::optional<long> n_max;
    std::optional<long> p_max;
    std::optional<int> guard;
    std::optional<long> budget;
};

ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

// Parses the expression strings into a validated problem.
CongruenceProblem build_problem(const ProblemFile& pf);

}  // namespace eiscong
