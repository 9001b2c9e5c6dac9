#include <doctest.h>

#include <random>

#include "eiscong/polyfield.hpp"

using namespace eiscong;

namespace {

RatFunc t() { return RatFunc::variable(); }

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&]() {
        std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = Rat(coeff(rng));
        return QPoly(std::move(c));
    };
    QPoly num = poly();
    QPoly den = poly();
    while (den.is_zero()) den = poly();
    return RatFunc(num, den);
}

}  // namespace

TEST_SUITE("polyfield") {

TEST_CASE("vt examples") {
    RatFunc a = t().pow(2) / (RatFunc{Rat(1)} + t());
    CHECK(a.vt() == Val(2));
    RatFunc b = RatFunc{Rat(2)} * t().pow(2) - RatFunc{Rat(2)} * t();
    CHECK(b.vt() == Val(1));
    CHECK(RatFunc{}.vt().is_inf());
    CHECK((RatFunc{Rat(1)} / t()).vt() == Val(-1));
}

TEST_CASE("evaluation") {
    IntPoly f({3, 0, 0, 1});  // t^3 + 3
    CHECK(f.eval(7) == 346);
    RatFunc g = (t() - RatFunc{Rat(1)}) / t();
    CHECK(g.eval(5) == make_rat(4, 5));
    RatFunc pole = RatFunc{Rat(1)} / (t() - RatFunc{Rat(5)});
    CHECK_THROWS_AS(pole.eval(5), PoleError);
}

TEST_CASE("strip_t examples") {
    RatFunc a = RatFunc{Rat(2)} * t().pow(2) - RatFunc{Rat(2)} * t();
    auto [d1, q1] = a.strip_t();
    CHECK(d1 == 1);
    CHECK(q1 == Rat(-2));

    RatFunc b = t() - t().pow(3);
    auto [d2, q2] = b.strip_t();
    CHECK(d2 == 1);
    CHECK(q2 == Rat(1));

    auto [d3, q3] = RatFunc{Rat(6)}.strip_t();
    CHECK(d3 == 0);
    CHECK(q3 == Rat(6));

    CHECK_THROWS_AS(RatFunc{}.strip_t(), std::domain_error);
}

TEST_CASE("strip_t inverts") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        RatFunc h = random_ratfunc(rng);
        if (h.is_zero()) continue;
        auto [d, q0] = h.strip_t();
        RatFunc unit = h / t().pow(d);
        CHECK(unit.vt() == Val(0));
        CHECK(unit.eval(0) == q0);
        CHECK(t().pow(d) * unit == h);
        CHECK(q0 != 0);
    }
}

TEST_CASE("vt is a valuation") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        CHECK((a * b).vt() == a.vt() + b.vt());
        CHECK((a + b).vt() >= vmin(a.vt(), b.vt()));
    }
}

TEST_CASE("normal form invariants") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        for (const RatFunc& h : {a + b, a - b, a * b}) {
            CHECK(h.den().leading() == Rat(1));
            CHECK(QPoly::gcd(h.num(), h.den()).degree() <= 0);
            if (h.is_zero()) CHECK(h.den().degree() == 0);
        }
        if (!b.is_zero()) {
            RatFunc q = a / b;
            CHECK(q.den().leading() == Rat(1));
            CHECK(q * b == a);
        }
    }
}

TEST_CASE("cancellation to canonical form") {
    RatFunc h = (t() - t().pow(3)) / (RatFunc{Rat(1)} - t().pow(2));
    CHECK(h == t());
}

TEST_CASE("integer polynomial detection") {
    CHECK(RatFunc(IntPoly({3, 0, 0, 1})).as_int_poly().has_value());
    CHECK(!(t() / RatFunc{Rat(2)}).as_int_poly().has_value());
    CHECK(!(RatFunc{Rat(1)} / t()).as_int_poly().has_value());
    auto zero = RatFunc{}.as_int_poly();
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());
}

TEST_CASE("int poly arithmetic") {
    IntPoly f({-1, 1});       // t - 1
    IntPoly g = f.pow(3);
    CHECK(g.eval(3) == 8);
    CHECK(g.degree() == 3);
    CHECK((f * f - f.pow(2)).is_zero());
    CHECK(IntPoly::variable().eval(9) == 9);
    CHECK_THROWS_AS(IntPoly().leading(), std::domain_error);
}

}  // TEST_SUITE
