#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "lacunary/rational.hpp"

namespace lacunary {

/// base^exp with base >= 2 and exp >= 0, kept symbolic. The exponent may be far too
/// large for the value to ever be materialized.
struct PurePower {
    Integer base;
    Integer exp;

    PurePower(Integer base_, Integer exp_);
};

enum class CompareMethod {
    trivial,         // an exponent is zero
    common_base,     // both bases are powers of one integer; exponents compared exactly
    exact_equal,     // valuation vectors proportional: equal
    materialized,    // both sides evaluated as integers
    log_enclosure,   // outward-rounded logarithms separated
};

std::string_view to_string(CompareMethod method);
std::string_view to_string(std::strong_ordering order);

/// How an ordering was decided. `precisions` lists the working precision (bits) of
/// every logarithm round, in order; it is empty unless method == log_enclosure.
struct ComparisonTrace {
    std::strong_ordering order = std::strong_ordering::equal;
    CompareMethod method = CompareMethod::trivial;
    std::vector<long> precisions;
};

/// Orders x = b1^e1 against y = b2^e2 exactly.
///
/// Both bases are split over a pairwise-coprime basis obtained by gcd refinement. A
/// one-element basis reduces the question to an exact exponent comparison; otherwise
/// equality holds iff the scaled valuation vectors coincide, and a non-equal pair is
/// separated by comparing e1*ln(b1) and e2*ln(b2) with outward-rounded enclosures,
/// starting from 64 fractional bits and doubling until the enclosures are disjoint.
ComparisonTrace compare_traced(const PurePower& x, const PurePower& y);
std::strong_ordering compare(const PurePower& x, const PurePower& y);

/// Orders x against a positive rational t. Exact when b^e is cheap to materialize
/// (relative to the size of t); otherwise by logarithm enclosures, which cannot meet
/// a tie in that regime.
ComparisonTrace power_vs_threshold_traced(const PurePower& x, const Rational& t);
std::strong_ordering power_vs_threshold(const PurePower& x, const Rational& t);

/// Outward-rounded enclosure of ln(x) for x > 0 at the given working precision.
/// The endpoints are the exact values of the rounded binary floats.
RationalInterval log_enclosure(const Rational& x, long precision_bits);

/// Pairwise-coprime basis (all elements > 1) over which both a and b factor exactly.
std::vector<Integer> coprime_basis(const Integer& a, const Integer& b);

}  // namespace lacunary
