#include <doctest.h>

#include <random>

#include "eiscong/parser.hpp"
#include "eiscong/problem_io.hpp"

using namespace eiscong;

TEST_SUITE("parser") {

TEST_CASE("polynomials") {
    RatFunc h = parse_expression("2*t^2 - 2*t");
    auto p = h.as_int_poly();
    REQUIRE(p.has_value());
    CHECK(p->coeffs() == std::vector<Int>{0, -2, 2});

    CHECK(parse_expression("t^3 + 3").as_int_poly()->eval(7) == 346);
    CHECK(parse_expression("0").is_zero());
    CHECK(parse_expression("  12  ") == RatFunc{Rat(12)});
}

TEST_CASE("rational functions and cancellation") {
    RatFunc h = parse_expression("(t - t^3)/(1 - t^2)");
    CHECK(h == RatFunc::variable());
    CHECK(parse_expression("(t - 1)/t").eval(5) == make_rat(4, 5));
    CHECK(parse_expression("1/2").num().coeff(0) == make_rat(1, 2));
}

TEST_CASE("implicit multiplication is rejected with a position") {
    try {
        parse_expression("2t");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(parse_expression("3(t+1)"), ParseError);
    CHECK_THROWS_AS(parse_expression("t t"), ParseError);
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_expression("2 + 3*t") == parse_expression("3*t + 2"));
    CHECK(parse_expression("2 - 3 - 4") == RatFunc{Rat(-5)});
    CHECK(parse_expression("12/4/3") == RatFunc{Rat(1)});
    CHECK(parse_expression("-t^2") == -(RatFunc::variable().pow(2)));
    CHECK(parse_expression("-2^2") == RatFunc{Rat(-4)});
    CHECK(parse_expression("( -2 )^2") == RatFunc{Rat(4)});
    CHECK(parse_expression("2*t^2") ==
          RatFunc{Rat(2)} * RatFunc::variable().pow(2));
    CHECK(parse_expression("t^(1+2)") == RatFunc::variable().pow(3));
    CHECK(parse_expression("t^0") == RatFunc{Rat(1)});
}

TEST_CASE("bad exponents") {
    CHECK_THROWS_AS(parse_expression("t^-1"), ParseError);
    CHECK_THROWS_AS(parse_expression("t^(1-2)"), ParseError);
    CHECK_THROWS_AS(parse_expression("t^t"), ParseError);
    CHECK_THROWS_AS(parse_expression("2^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_expression("t^1000"), ParseError);
    CHECK_THROWS_AS(parse_expression("2^3^2"), ParseError);  // no chaining
    CHECK(parse_expression("t^999").vt() == Val(999));
}

TEST_CASE("other syntax errors") {
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("(t"), ParseError);
    CHECK_THROWS_AS(parse_expression("t +"), ParseError);
    CHECK_THROWS_AS(parse_expression("x"), ParseError);
    CHECK_THROWS_AS(parse_expression("1/(t - t)"), ParseError);
}

TEST_CASE("printing round trip") {
    for (const char* src :
         {"t^3 + 3", "2*t^2 - 2*t", "(t - 1)/t", "0", "-t", "1/2*t + 1/3",
          "(t^2 + 6*t + 1)/(t^3 - 1/2)", "-3", "t^10 - t"}) {
        RatFunc h = parse_expression(src);
        CHECK(parse_expression(to_string(h)) == h);
    }
    std::mt19937 rng(321);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int i = 0; i < 300; ++i) {
        std::vector<Rat> nc(static_cast<std::size_t>(deg(rng)) + 1);
        std::vector<Rat> dc(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : nc) x = make_rat(coeff(rng), 1 + std::abs(coeff(rng)));
        for (auto& x : dc) x = make_rat(coeff(rng), 1 + std::abs(coeff(rng)));
        QPoly den{dc};
        if (den.is_zero()) continue;
        RatFunc h(QPoly{nc}, den);
        CHECK(parse_expression(to_string(h)) == h);
    }
}

TEST_CASE("canonical forms") {
    CHECK(to_string(parse_expression("t^3 + 3")) == "t^3 + 3");
    CHECK(to_string(parse_expression("2*t^2 - 2*t")) == "2*t^2 - 2*t");
    CHECK(to_string(parse_expression("0")) == "0");
    CHECK(to_string(parse_expression("-t")) == "-t");
    CHECK(to_string(parse_expression("(2*t - 2)/(2*t)")) == "(t - 1)/t");
}

TEST_CASE("garbage either parses or reports a position") {
    std::mt19937 rng(5150);
    const std::string alphabet = "0123456789t+-*/^() .";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    int parsed = 0;
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        int n = len(rng);
        for (int j = 0; j < n; ++j) s += alphabet[pick(rng)];
        try {
            parse_expression(s);
            ++parsed;
        } catch (const ParseError& e) {
            CHECK(e.offset() <= s.size());
        }
    }
    CHECK(parsed > 0);  // some random strings are valid expressions
}

TEST_CASE("problem files") {
    ProblemFile pf = parse_problem_text(
        "# a comment\n"
        "N = 2\n"
        "f = [t + 3, t^3 + 3]\n"
        "g = [1, -1]\n"
        "g0 = 0\n"
        "nmax = 30\n"
        "pmax = 31\n");
    CHECK(pf.N == 2);
    CHECK(pf.f.size() == 2);
    CHECK(*pf.n_max == 30);
    CHECK(*pf.p_max == 31);
    CongruenceProblem problem = build_problem(pf);
    CHECK(problem.N == 2);
    CHECK(problem.f[1].eval(7) == 346);

    CHECK_THROWS_AS(parse_problem_text("N = 2\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_text("N = 2\nf = t\ng = [1]\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_text("N = x\nf = [t]\ng = [1]\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_text("what = 1\n"), ParseError);

    ProblemFile bad;
    bad.N = 1;
    bad.f = {"t/2"};
    bad.g = {"1"};
    CHECK_THROWS_AS(build_problem(bad), std::invalid_argument);
}

}  // TEST_SUITE
