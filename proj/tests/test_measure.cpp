#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lacunary/errors.hpp"
#include "lacunary/measure.hpp"

using namespace lacunary;

namespace {

CompositeNumber example(Operation op) {
    const PowerSchedule s(2, 1);
    return CompositeNumber(op, LacunarySeries(2, s), LacunarySeries(3, s));
}

const std::vector<Integer> kCubeRootTwo{-2, 0, 0, 1};

}  // namespace

TEST_CASE("targets") {
    CHECK(AlgebraicTarget(3, 2).scale() == 36);
    CHECK_THROWS_AS(AlgebraicTarget(1, 2), InvalidArgument);
    CHECK_THROWS_AS(AlgebraicTarget(2, 0), InvalidArgument);
    CHECK(naive_height(kCubeRootTwo) == 2);
    CHECK(naive_height(std::vector<Integer>{3, -7, 1}) == 7);
}

TEST_CASE("Liouville gap bound") {
    CHECK(liouville_gap_bound(AlgebraicTarget(3, 2), 36) == Rational(1, 839808));
    CHECK(liouville_gap_bound(AlgebraicTarget(2, 1), 1) == Rational(1, 4));
    CHECK(liouville_gap_bound(AlgebraicTarget(3, 1), 1296) == Rational(1, 9 * ipow(1296, 3)));
}

TEST_CASE("bracketing index") {
    const auto c = example(Operation::sum);

    const BracketResult h3 = find_n1(c, AlgebraicTarget(3, 3), 4);
    CHECK(h3.status == BracketStatus::found);
    CHECK(h3.n1 == std::optional<std::size_t>(2));
    CHECK(h3.scale == 54);
    REQUIRE(h3.evidence.size() == 2);
    CHECK(h3.evidence[0].left == std::strong_ordering::less);
    CHECK(h3.evidence[0].right == std::strong_ordering::less);
    CHECK(h3.evidence[1].left == std::strong_ordering::less);
    CHECK(h3.evidence[1].right == std::strong_ordering::greater);
    // Reproduced by direct integer comparison.
    CHECK(ipow(6, 4) < 54 * 54);
    CHECK(ipow(6, 16) > 54 * 54);

    const BracketResult h2 = find_n1(c, AlgebraicTarget(3, 2), 4);
    CHECK(h2.status == BracketStatus::tie);
    CHECK(h2.tie_index == std::optional<std::size_t>(2));
    CHECK_FALSE(h2.n1);

    const BracketResult big = find_n1(c, AlgebraicTarget(3, ipow(10, 400)), 3);
    CHECK(big.status == BracketStatus::not_found);
    CHECK(to_string(big.status) == "not_found");
}

TEST_CASE("sufficient conditions at the bracketing index") {
    const auto c = example(Operation::sum);
    const SufficiencyCheck s = check_sufficiency(c, AlgebraicTarget(3, 3), 2);
    // 6^16 > 54 * 6^12.
    CHECK(s.gap_condition);
    // a_3 = 16 is not larger than 2 d a_2 = 24.
    CHECK_FALSE(s.growth_condition);
    CHECK(check_sufficiency(c, AlgebraicTarget(3, 3), 3).growth_condition);
}

TEST_CASE("closed-form measure") {
    for (int h = 1; h <= 10; ++h) {
        const MeasureBound m = approximation_measure(AlgebraicTarget(3, h));
        CHECK(m.bound == Rational(1, ipow(18 * h, 13)));
    }
    CHECK(approximation_measure(AlgebraicTarget(2, 1)).bound == Rational(1, ipow(8, 9)));
    CHECK(approximation_measure(AlgebraicTarget(3, 5)).bound == Rational(1, ipow(90, 13)));

    const MeasureBound m = approximation_measure(AlgebraicTarget(4, 7));
    CHECK(m.bound.get_den() == ipow(2, 17) * ipow(7, 17) * ipow(4, 34));
    CHECK(m.bound.get_num() == 1);
    REQUIRE(m.trace.size() == 4);
    CHECK(m.trace[2] == "bound = 1/(224)^17");
}

TEST_CASE("root enclosure") {
    const RationalInterval r = root_enclosure(kCubeRootTwo, {1, 2}, Rational(1, 1000));
    CHECK(r.width() <= Rational(1, 1000));
    CHECK(evaluate(kCubeRootTwo, r.lo) <= 0);
    CHECK(evaluate(kCubeRootTwo, r.hi) >= 0);
    CHECK(r.contains(Rational(1259921, 1000000)));

    const std::vector<Integer> linear{-1, 1};
    CHECK(root_enclosure(linear, {0, 2}, Rational(1, 2)).contains(Rational(1)));

    const std::vector<Integer> no_root{1, 0, 1};
    CHECK_THROWS_AS(root_enclosure(no_root, {0, 1}, Rational(1, 10)), NoSignChange);
}

TEST_CASE("checks against concrete targets") {
    const RationalInterval xi = root_enclosure(kCubeRootTwo, {1, 2}, Rational(1, 1000000));
    const AlgebraicTarget target(3, 2, xi);

    const TargetCheck sum = check_against_target(example(Operation::sum), target, 3);
    CHECK(sum.status == TargetStatus::pass);
    REQUIRE(sum.distance);
    // |0.4359720721... - 1.2599210498...| = 0.82394897...
    CHECK(*sum.distance > Rational(823948, 1000000));
    CHECK(*sum.distance < Rational(823950, 1000000));
    CHECK(sum.bound == Rational(1, ipow(36, 13)));

    const TargetCheck diff = check_against_target(example(Operation::difference), target, 3);
    CHECK(diff.status == TargetStatus::pass);
    CHECK(*diff.distance != *sum.distance);
    CHECK(*diff.distance > Rational(1070, 1000));

    const auto c = example(Operation::sum);
    const Rational inside = c.enclose(3).lo;
    const TargetCheck overlap =
        check_against_target(c, AlgebraicTarget(3, 2, RationalInterval::point(inside)), 2);
    CHECK(overlap.status == TargetStatus::indeterminate);
    CHECK_FALSE(overlap.distance);

    CHECK_THROWS_AS(check_against_target(c, AlgebraicTarget(3, 2), 3), InvalidArgument);
    CHECK_THROWS_AS(check_against_target(c, target, 0), InsufficientDepth);
}
