#include "eiscong/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "eiscong/errors.hpp"
#include "eiscong/parser.hpp"

namespace eiscong {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, std::size_t line_no) {
    std::string body = strip(s);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw ParseError("expected a bracketed list", line_no);
    }
    body = body.substr(1, body.size() - 2);
    std::vector<std::string> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.empty()) throw ParseError("empty list entry", line_no);
        out.push_back(item);
    }
    return out;
}

long parse_long(const std::string& s, std::size_t line_no) {
    try {
        std::size_t used = 0;
        long v = std::stol(strip(s), &used);
        if (used != strip(s).size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError("expected an integer value", line_no);
    }
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
    ProblemFile pf;
    bool have_n = false, have_f = false, have_g = false;
    std::stringstream ss(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key == "N") {
            pf.N = parse_long(value, line_no);
            have_n = true;
        } else if (key == "f") {
            pf.f = split_list(value, line_no);
            have_f = true;
        } else if (key == "g") {
            pf.g = split_list(value, line_no);
            have_g = true;
        } else if (key == "g0") {
            pf.g0 = value;
        } else if (key == "nmax") {
            pf.n_max = parse_long(value, line_no);
        } else if (key == "pmax") {
            pf.p_max = parse_long(value, line_no);
        } else if (key == "guard") {
            pf.guard = static_cast<int>(parse_long(value, line_no));
        } else if (key == "budget") {
            pf.budget = parse_long(value, line_no);
        } else {
            throw ParseError("unknown key '" + key + "'", line_no);
        }
    }
    if (!have_n || !have_f || !have_g) {
        throw ParseError("problem file must set N, f and g", line_no);
    }
    return pf;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

CongruenceProblem build_problem(const ProblemFile& pf) {
    std::vector<IntPoly> f;
    for (const auto& src : pf.f) {
        RatFunc h = parse_expression(src);
        auto p = h.as_int_poly();
        if (!p) {
            throw std::invalid_argument("f entry is not an integer polynomial: " + src);
        }
        f.push_back(*p);
    }
    std::vector<RatFunc> g;
    for (const auto& src : pf.g) g.push_back(parse_expression(src));
    return CongruenceProblem(pf.N, std::move(f), std::move(g),
                             parse_expression(pf.g0));
}

}  // namespace eiscong
