#include <doctest.h>

#include <random>

#include "eiscong/arith.hpp"
#include "oracles.hpp"

using namespace eiscong;

namespace {

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-400, 400);
    std::uniform_int_distribution<long> den(1, 400);
    return make_rat(num(rng), den(rng));
}

// A bounded-precision result must be consistent with the exact value it
// approximates.
void check_consistent(const ScaledResidue& sr, const Rat& exact) {
    if (sr.is_exact_zero()) {
        CHECK(exact == 0);
        return;
    }
    if (sr.is_capped_zero()) {
        CHECK(vp(exact, sr.p()) >= sr.cap());
        return;
    }
    REQUIRE(exact != 0);
    CHECK(vp(exact, sr.p()) == sr.val());
    Rat surrogate(sr.unit());
    long v = sr.val().finite();
    if (v >= 0) {
        surrogate *= Rat(pow_ui(sr.p(), static_cast<unsigned long>(v)));
    } else {
        surrogate /= Rat(pow_ui(sr.p(), static_cast<unsigned long>(-v)));
    }
    CHECK(vp(exact - surrogate, sr.p()) >= sr.cap());
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("vp on rationals") {
    CHECK(vp(make_rat(50, 3), 5) == Val(2));
    CHECK(vp(make_rat(1, 6), 3) == Val(-1));
    CHECK(vp(Rat(0), 7).is_inf());
    CHECK(vp(Rat(-75), 5) == Val(2));
    CHECK_THROWS_AS(vp(Rat(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(vp(Rat(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(vp(Rat(1), 9), std::invalid_argument);
}

TEST_CASE("vp is a valuation") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 300; ++i) {
        Rat x = random_rat(rng), y = random_rat(rng);
        for (long p : {3L, 5L, 7L}) {
            CHECK(vp(x * y, p) == vp(x, p) + vp(y, p));
            CHECK(vp(x + y, p) >= vmin(vp(x, p), vp(y, p)));
        }
    }
}

TEST_CASE("reduce_scaled examples") {
    ScaledResidue a = reduce_scaled(make_rat(1, 6), 5, 2);
    CHECK(a.val() == Val(0));
    CHECK(a.unit() == 21);

    ScaledResidue b = reduce_scaled(make_rat(-31, 60), 5, 2);
    CHECK(b.val() == Val(-1));
    CHECK(b.unit() == 12);

    ScaledResidue z = reduce_scaled(Rat(0), 7, 3);
    CHECK(z.is_exact_zero());
}

TEST_CASE("reduce_scaled round trip") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        Rat x = random_rat(rng);
        if (x == 0) continue;
        for (long p : {5L, 7L}) {
            for (int W : {1, 2, 3}) {
                check_consistent(reduce_scaled(x, p, W), x);
            }
        }
    }
}

TEST_CASE("teichmuller examples") {
    CHECK(teichmuller(2, 5, 2).value() == 7);
    CHECK(teichmuller(3, 5, 2).value() == 18);
    CHECK(teichmuller(1, 11, 3).value() == 1);
    CHECK_THROWS_AS(teichmuller(10, 5, 2), std::invalid_argument);
}

TEST_CASE("teichmuller is the root-of-unity lift") {
    for (long p : {5L, 7L}) {
        for (int W : {1, 2, 3}) {
            Int mod = pow_ui(p, static_cast<unsigned long>(W));
            for (long d = 1; d < mod; ++d) {
                if (d % p == 0) continue;
                Residue w = teichmuller(d, p, W);
                CHECK(pow_mod(w.value(), Int(p - 1), mod) == 1);
                CHECK((w.value() - d) % p == 0);
                CHECK(w.value() == oracles::teichmuller_search(d, p, W));
            }
        }
    }
}

TEST_CASE("angle_and_q examples") {
    auto [a2, q2] = angle_and_q(2, 5, 2);
    CHECK(a2.value() == 11);
    CHECK(q2.value() == 2);
    auto [a3, q3] = angle_and_q(3, 5, 2);
    CHECK(a3.value() == 21);
    CHECK(q3.value() == 4);
    auto [a1, q1] = angle_and_q(1, 7, 3);
    CHECK(a1.value() == 1);
    CHECK(q1.value() == 0);
    CHECK_THROWS_AS(angle_and_q(2, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(angle_and_q(5, 5, 2), std::invalid_argument);
}

TEST_CASE("angle parts reassemble") {
    for (long p : {5L, 11L}) {
        int W = 3;
        Int mod = pow_ui(p, static_cast<unsigned long>(W));
        for (long d = 1; d <= 60; ++d) {
            if (d % p == 0) continue;
            auto [angle, q] = angle_and_q(d, p, W);
            CHECK(angle.value() % p == 1);  // <d> = 1 mod p
            Int rebuilt = (1 + p * q.value()) % mod;
            CHECK(rebuilt == angle.value());
            // d = omega(d) * <d>
            Int w = teichmuller(d, p, W).value();
            CHECK((w * angle.value() - d) % mod == 0);
        }
    }
}

TEST_CASE("residue inverse of a non-unit fails") {
    Residue r(5, 2, 10);
    CHECK_THROWS_AS(r.inv(), std::domain_error);
    CHECK(Residue(5, 2, 7).inv().value() == 18);
}

TEST_CASE("scaled residue arithmetic tracks exact values") {
    std::mt19937 rng(2024);
    long p = 5;
    for (int i = 0; i < 400; ++i) {
        Rat x = random_rat(rng), y = random_rat(rng);
        ScaledResidue sx = reduce_scaled(x, p, 3);
        ScaledResidue sy = reduce_scaled(y, p, 3);
        check_consistent(sx.add(sy), x + y);
        check_consistent(sx.sub(sy), x - y);
        check_consistent(sx.mul(sy), x * y);
        check_consistent(sx.neg(), -x);
        check_consistent(sx.mul_exact(y), x * y);
        if (x != 0) check_consistent(sx.add_exact(y), x + y);
    }
}

TEST_CASE("margins") {
    long p = 5;
    Rat x = make_rat(26, 1);
    ScaledResidue sx = reduce_scaled(x, p, 3);
    CHECK(margin_against_exact(sx, Rat(1)) == Margin::exact(2));      // 25
    CHECK(margin_against_exact(sx, Rat(26)) == Margin::at_least(3));  // beyond cap
    CHECK(margin_of(reduce_scaled(Rat(0), p, 3)) == Margin::infinite());
    CHECK(margin_of(ScaledResidue::capped_zero(p, 4)) == Margin::at_least(4));
    CHECK(Margin::exact(7).truncated(5) == Margin::at_least(5));
    CHECK(Margin::exact(4).truncated(5) == Margin::exact(4));
    CHECK(Margin::at_least(2).passes(2));
    CHECK(!Margin::exact(1).passes(2));
}

TEST_CASE("primality") {
    std::vector<long> expected;
    for (long n = 2; n <= 200; ++n) {
        bool prime = n >= 2;
        for (long d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) expected.push_back(n);
        CHECK(is_prime(n) == prime);
    }
    CHECK(primes_in(1, 200) == expected);
    CHECK(primes_in(4, 12) == std::vector<long>{5, 7, 11});
    CHECK(primes_in(10, 10).empty());
    CHECK(!is_odd_prime(2));
}

}  // TEST_SUITE
