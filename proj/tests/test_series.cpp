#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lacunary/errors.hpp"
#include "lacunary/series.hpp"
#include "oracles.hpp"

using namespace lacunary;

namespace {

LacunarySeries example(int g, Budget budget = {}) { return LacunarySeries(g, PowerSchedule(2, 1, budget)); }

}  // namespace

TEST_CASE("partial sums") {
    const Convergent c = partial_sum(example(2), 3);
    CHECK(c.p == 20481);
    CHECK(c.q == 65536);
    CHECK(c.value() == oracle::direct_sum(2, {2, 4, 16}));

    const Convergent one = partial_sum(example(2), 1);
    CHECK(one.p == 1);
    CHECK(one.q == 4);

    const Convergent three = partial_sum(example(3), 2);
    CHECK(three.p == 10);
    CHECK(three.q == 81);

    const Convergent deep = partial_sum(example(5), 4);
    CHECK(deep.q == ipow(5, 256));
    CHECK(deep.value() == oracle::direct_sum(5, {2, 4, 16, 256}));
}

TEST_CASE("tail sandwich") {
    const TailSandwich s1 = tail_sandwich(example(2), 1);
    CHECK(s1.lower == Rational(1, 16));
    CHECK(s1.upper == Rational(1, 8));
    const TailSandwich s2 = tail_sandwich(example(2), 2);
    CHECK(s2.lower == Rational(1, 65536));
    CHECK(s2.upper == Rational(1, 32768));

    // theta - 1/4 = 0.0625152...
    const RationalInterval box = enclose(example(2), 5);
    const RationalInterval tail = box - Rational(1, 4);
    CHECK(tail.lo > s1.lower);
    CHECK(tail.hi < s1.upper);
}

TEST_CASE("rigorous tail upper bound") {
    CHECK(rigorous_tail_upper(example(2), 1) == Rational(1, 8));
    CHECK(rigorous_tail_upper(example(3), 1) == Rational(1, 54));
    const Rational actual = oracle::direct_sum(3, {4, 16, 256});
    CHECK(actual < Rational(1, 54));
    CHECK(actual > Rational(123456, 10000000));
}

TEST_CASE("clamped tail past the materialization ceiling") {
    const LacunarySeries s = example(2, Budget{1024, 8});
    // a_5 = 65536 > 2^8: the exponent is clamped to 256, still an upper bound.
    CHECK(rigorous_tail_upper(s, 4) == Rational(1, ipow(2, 255)));
    CHECK_THROWS_AS(s.power(5), ExponentBudgetExceeded);
}

TEST_CASE("enclosures") {
    const LacunarySeries s = example(2);
    CHECK(enclose(s, 1) == RationalInterval(Rational(1, 4), Rational(1, 4) + Rational(1, 8)));
    CHECK(enclose(s, 2).width() == Rational(1, 32768));
    CHECK(enclose(s, 1).contains(enclose(s, 2)));
    CHECK(enclose(s, 2).contains(enclose(s, 3)));
    for (std::size_t m = 2; m <= 4; ++m) CHECK(enclose(s, 1).contains(partial_sum(s, m).value()));
}

TEST_CASE("decimal digits") {
    CHECK(decimal_digits(example(2), 10) == "0.3125152587");
    // 0.12345681335..., truncated rather than rounded.
    CHECK(decimal_digits(example(3), 6) == "0.123456");
    CHECK(decimal_digits(example(7), 1).rfind("0.", 0) == 0);
    const std::string longer = decimal_digits(example(3), 30);
    CHECK(longer.rfind(decimal_digits(example(3), 12), 0) == 0);
    CHECK_THROWS_AS(decimal_digits(example(2), 0), InvalidArgument);
    CHECK_THROWS_AS(decimal_digits(example(2, Budget{1024, 1}), 10), PrecisionUnattainable);
}

TEST_CASE("series validation") {
    CHECK_THROWS_AS(LacunarySeries(1, PowerSchedule(2, 1)), InvalidArgument);
}
