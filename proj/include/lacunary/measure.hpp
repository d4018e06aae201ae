#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/rational.hpp"
#include "lacunary/witness.hpp"

namespace lacunary {

/// An algebraic number of degree d >= 2 and naive height H >= 1, optionally with an
/// exact enclosure of a concrete value.
struct AlgebraicTarget {
    unsigned degree;
    Integer height;
    std::optional<RationalInterval> value;

    AlgebraicTarget(unsigned degree_, Integer height_, std::optional<RationalInterval> value_ = {});

    /// 2 H d^2
    Integer scale() const;
};

/// Maximum absolute coefficient.
Integer naive_height(std::span<const Integer> coeffs);

/// 1 / (H d^2 q^d)
Rational liouville_gap_bound(const AlgebraicTarget& t, const Integer& q);

enum class BracketStatus { found, not_found, tie };
std::string_view to_string(BracketStatus status);

/// Both comparisons at index n, squared: (g1 g2)^{a_n} and (g1 g2)^{a_{n+1}} against (2Hd^2)^2.
struct BracketEvidence {
    std::size_t n = 0;
    std::strong_ordering left = std::strong_ordering::equal;
    std::optional<std::strong_ordering> right;
};

struct BracketResult {
    BracketStatus status = BracketStatus::not_found;
    std::optional<std::size_t> n1;
    /// For a tie: the index whose left comparison (g1 g2)^{a_m/2} = 2Hd^2 is exact.
    /// A tie on the right side at n is the left side at n + 1 and is reported there.
    std::optional<std::size_t> tie_index;
    Integer scale;
    std::vector<BracketEvidence> evidence;
};

/// Smallest n <= n_max with (g1 g2)^{a_n/2} < 2Hd^2 < (g1 g2)^{a_{n+1}/2}, both strict.
BracketResult find_n1(const CompositeNumber& c, const AlgebraicTarget& t, std::size_t n_max);

/// The two sufficient conditions behind the bracketing at index n.
struct SufficiencyCheck {
    std::size_t n = 0;
    /// (g1 g2)^{a_{n+1}} > 2Hd^2 (g1 g2)^{d a_n}
    bool gap_condition = false;
    /// a_{n+1} > 2 d a_n, i.e. (g1 g2)^{a_{n+1}/2} > (g1 g2)^{d a_n}
    bool growth_condition = false;
};

SufficiencyCheck check_sufficiency(const CompositeNumber& c, const AlgebraicTarget& t, std::size_t n);

struct MeasureBound {
    /// (2Hd^2)^{-(1+4d)}
    Rational bound;
    std::optional<std::size_t> n1;
    std::vector<std::string> trace;
};

MeasureBound approximation_measure(const AlgebraicTarget& t);

enum class TargetStatus { pass, fail, indeterminate };
std::string_view to_string(TargetStatus status);

struct TargetCheck {
    TargetStatus status = TargetStatus::indeterminate;
    RationalInterval value;
    /// Exact lower bound on |theta - xi| when the enclosures are disjoint.
    std::optional<Rational> distance;
    Rational bound;
};

/// Compares the distance between value(c) and t.value against the measure bound.
/// InsufficientDepth for depth 0; InvalidArgument without a target enclosure.
TargetCheck check_against_target(const CompositeNumber& c, const AlgebraicTarget& t, std::size_t depth);

/// Sign bisection of the integer polynomial (constant term first) on `bracket` until
/// the width is at most `width`. NoSignChange unless the endpoint signs differ or an
/// endpoint is itself a root.
RationalInterval root_enclosure(std::span<const Integer> coeffs, const RationalInterval& bracket,
                                const Rational& width);

/// Exact polynomial value, constant term first.
Rational evaluate(std::span<const Integer> coeffs, const Rational& x);

}  // namespace lacunary
