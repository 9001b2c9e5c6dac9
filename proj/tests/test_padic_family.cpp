#include <doctest.h>

#include "eiscong/padic_family.hpp"
#include "eiscong/bernoulli.hpp"
#include "eiscong/polyfield.hpp"

using namespace eiscong;

TEST_SUITE("padic_family") {

TEST_CASE("falling factorial coefficients") {
    CHECK(stirling_falling(1) == std::vector<Int>{0, 1});
    CHECK(stirling_falling(2) == std::vector<Int>{0, -1, 1});
    CHECK(stirling_falling(3) == std::vector<Int>{0, 2, -3, 1});

    // oracle: multiply the linear factors as polynomials
    for (long m = 1; m <= 10; ++m) {
        IntPoly prod = IntPoly::constant(1);
        for (long i = 0; i < m; ++i) {
            prod = prod * IntPoly({-i, 1});
        }
        CHECK(stirling_falling(m) == prod.coeffs());
    }
}

TEST_CASE("weight embedding") {
    Weight w = Weight::from_integer(26, 5, 2);
    CHECK(w.s_part == 1);
    CHECK(w.u_part == 2);
}

TEST_CASE("n = 1 expansion is the constant 1") {
    TaylorCoeffs tc = taylor_coeffs(1, 5, 2, 2);
    REQUIRE(!tc.coeffs.empty());
    CHECK(tc.coeffs[0].val() == Val(0));
    CHECK(tc.coeffs[0].unit() == 1);
    for (std::size_t m = 1; m < tc.coeffs.size(); ++m) {
        CHECK(tc.coeffs[m].is_capped_zero());
    }
    CHECK(eval_taylor(tc, 6).unit() == 1);
}

TEST_CASE("first coefficient at n = 2") {
    TaylorCoeffs tc = taylor_coeffs(2, 5, 2, 2);
    CHECK(tc.coeffs[0].residue_mod(2) == 13);  // 1 + 2^{-1} omega(2)^2 mod 25
}

TEST_CASE("default expansion order") {
    CHECK(taylor_coeffs(2, 5, 2, 3).m_max == 4);   // ceil(3*4/3)
    CHECK(taylor_coeffs(2, 7, 2, 3).m_max == 4);   // ceil(3*6/5)
    CHECK(taylor_coeffs(2, 5, 0, 1).m_max == 2);
}

TEST_CASE("evaluation matches the divisor sums") {
    TaylorCoeffs tc = taylor_coeffs(2, 5, 2, 2);
    ScaledResidue at6 = eval_taylor(tc, 6);
    CHECK(at6.residue_mod(2) == 8);  // sigma*_5(2) = 33
    ScaledResidue at26 = eval_taylor(tc, 26);
    CHECK(at26.residue_mod(2) == sigma_pow_mod(25, 2, 5, 2, true).value());

    CHECK_THROWS_AS(eval_taylor(tc, 8), WrongBranchError);  // 8 = 0 mod 4
    CHECK_THROWS_AS(eval_taylor(tc, 7), std::invalid_argument);
}

TEST_CASE("reconstruction across branches and weights") {
    for (long p : {5L, 7L}) {
        for (long n = 1; n <= 6; ++n) {
            for (long l = 0; l < p - 1; l += 2) {
                TaylorCoeffs tc = taylor_coeffs(n, p, l, 2);
                long k0 = l >= 4 ? l : l + p - 1;
                while (k0 < 4 || k0 % 2 != 0) k0 += p - 1;
                for (long j = 0; j < 3; ++j) {
                    Int k = k0 + j * (p - 1);
                    Int expected = sigma_pow_mod(k - 1, n, p, 2, true).value();
                    CHECK(eval_taylor(tc, k).residue_mod(2) == expected);
                }
            }
        }
    }
}

TEST_CASE("valuation bounds hold on computed coefficients") {
    for (long p : {5L, 7L}) {
        for (long n : {1L, 2L, 6L, 10L}) {
            for (long l = 0; l < p - 1; l += 2) {
                TaylorCoeffs tc = taylor_coeffs(n, p, l, 3);
                BoundReport rep = check_valuation_bounds(tc);
                CHECK(rep.all_pass);
                REQUIRE(rep.checks.size() == tc.coeffs.size());
                CHECK(rep.checks[0].required_general == 0);
                for (const auto& chk : rep.checks) {
                    if (tc.p >= chk.m + 2) {
                        REQUIRE(chk.required_small_m.has_value());
                        CHECK(*chk.required_small_m == chk.m);
                    }
                }
            }
        }
    }
}

TEST_CASE("branch data depends on l only mod p - 1") {
    TaylorCoeffs a = taylor_coeffs(6, 5, 2, 2);
    TaylorCoeffs b = taylor_coeffs(6, 5, 10, 2);
    REQUIRE(a.coeffs.size() == b.coeffs.size());
    CHECK(a.l == b.l);
    for (std::size_t m = 0; m < a.coeffs.size(); ++m) {
        CHECK(a.coeffs[m] == b.coeffs[m]);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(taylor_coeffs(0, 5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(taylor_coeffs(2, 4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(taylor_coeffs(2, 5, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(taylor_coeffs(2, 5, 2, 0), std::invalid_argument);
    // an order below the certified tail bound is rejected
    CHECK_THROWS_AS(taylor_coeffs(2, 5, 2, 3, 2), std::invalid_argument);
    CHECK(taylor_coeffs(2, 5, 2, 3, 8).m_max == 8);
}

}  // TEST_SUITE
