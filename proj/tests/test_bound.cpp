#include <doctest.h>

#include "eiscong/bound.hpp"
#include "eiscong/parser.hpp"
#include "eiscong/verifier.hpp"

using namespace eiscong;

namespace {

IntPoly ipoly(const std::string& s) { return *parse_expression(s).as_int_poly(); }

}  // namespace

TEST_SUITE("bound") {

TEST_CASE("collected valuated functions") {
    BernoulliCache cache;
    CongruenceProblem vs = preset_von_staudt(ipoly("t - 1"));
    auto fns = collect_valuated_functions(vs, cache);
    REQUIRE(fns.size() == 2);
    CHECK(fns[0] == parse_expression("t"));            // C1
    CHECK(fns[1] == parse_expression("2*t^2 - 2*t"));  // C2, m = 0

    CongruenceProblem ku = preset_kummer(ipoly("t + 3"), ipoly("t^3 + 3"));
    auto kfns = collect_valuated_functions(ku, cache);
    REQUIRE(kfns.size() == 2);  // C1 and C4 vanish
    CHECK(kfns[0] == parse_expression("t - t^3"));
    CHECK(kfns[1] == parse_expression("(t - t^3) * (t^3 + t + 6)"));

    CongruenceProblem zero(1, {ipoly("t")}, {RatFunc{}}, RatFunc{});
    CHECK(collect_valuated_functions(zero, cache).empty());
}

TEST_CASE("compute_P on the classical pairs") {
    BernoulliCache cache;
    BoundBreakdown vs = compute_P(preset_von_staudt(ipoly("t - 1")), cache);
    CHECK(vs.b1 == 3);
    CHECK(vs.b2 == 1);
    CHECK(vs.b3 == 4);
    CHECK(vs.b4 == 2);
    CHECK(vs.b5 == 2);
    CHECK(vs.P == 4);

    BoundBreakdown ku = compute_P(preset_kummer(ipoly("t + 3"), ipoly("t^3 + 3")), cache);
    CHECK(ku.b1 == 5);
    CHECK(ku.b2 == 5);
    CHECK(ku.b3 == 0);
    CHECK(ku.b4 == 1);
    CHECK(ku.b5 == 6);
    CHECK(ku.P == 6);

    CongruenceProblem simple(1, {ipoly("t")}, {RatFunc{Rat(1)}}, RatFunc{});
    CHECK(compute_P(simple, cache).b2 == 2);
}

TEST_CASE("independent of list order") {
    BernoulliCache cache;
    CongruenceProblem a(2, {ipoly("t + 3"), ipoly("t^3 + 3")},
                        {RatFunc{Rat(1)}, RatFunc{Rat(-1)}}, RatFunc{});
    CongruenceProblem b(2, {ipoly("t^3 + 3"), ipoly("t + 3")},
                        {RatFunc{Rat(-1)}, RatFunc{Rat(1)}}, RatFunc{});
    BoundBreakdown ba = compute_P(a, cache);
    BoundBreakdown bb = compute_P(b, cache);
    CHECK(ba.P == bb.P);
    CHECK(ba.b5 == bb.b5);
}

TEST_CASE("indexes exceed the threshold beyond P") {
    BernoulliCache cache;
    for (const CongruenceProblem& problem :
         {preset_von_staudt(ipoly("t - 1")),
          preset_kummer(ipoly("t + 3"), ipoly("t^3 + 3")),
          preset_von_staudt(ipoly("t^2 - 5*t + 4"))}) {
        BoundBreakdown bb = compute_P(problem, cache);
        long T = std::max<long>(3, problem.N);
        for (const auto& fi : problem.f) {
            for (long j = bb.P + 1; j <= bb.P + 1000; ++j) {
                CHECK(fi.eval(j) > T);
            }
        }
    }
}

TEST_CASE("t-adic valuations transfer to p-adic ones beyond P") {
    BernoulliCache cache;
    for (const CongruenceProblem& problem :
         {preset_von_staudt(ipoly("t - 1")),
          preset_kummer(ipoly("t + 3"), ipoly("t^3 + 3"))}) {
        BoundBreakdown bb = compute_P(problem, cache);
        auto fns = collect_valuated_functions(problem, cache);
        for (long p : primes_in(bb.P, bb.P + 200)) {
            for (const auto& gi : problem.g) {
                if (gi.is_zero()) continue;
                CHECK(vp(gi.eval(p), p) == gi.vt());
            }
            for (const auto& h : fns) {
                CHECK(vp(h.eval(p), p) == h.vt());
            }
        }
    }
}

}  // TEST_SUITE
