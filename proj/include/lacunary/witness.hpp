#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/powercmp.hpp"
#include "lacunary/rational.hpp"
#include "lacunary/series.hpp"

namespace lacunary {

enum class Operation { sum, difference, product, quotient };

std::string_view to_string(Operation op);
/// Accepts "sum", "difference", "product", "quotient". Throws InvalidArgument.
Operation parse_operation(std::string_view text);

/// theta_1 (op) theta_2 for two series over one shared schedule and distinct bases.
///
/// Every gap bound is stated against the smaller of the two bases, min(g1, g2): its
/// tail dominates both remainders. Under the usual labelling g1 > g2 that is g2.
class CompositeNumber {
public:
    CompositeNumber(Operation op, LacunarySeries first, LacunarySeries second);

    Operation op() const { return op_; }
    const LacunarySeries& first() const { return first_; }
    const LacunarySeries& second() const { return second_; }
    const PowerSchedule& schedule() const { return first_.schedule(); }
    const LacunarySeries& smaller() const;
    const Integer& smaller_base() const { return smaller().base(); }

    Rational combine(const Rational& x, const Rational& y) const;
    RationalInterval combine(const RationalInterval& x, const RationalInterval& y) const;

    /// Enclosure of the composite value from both components at `depth` terms.
    RationalInterval enclose(std::size_t depth) const;

private:
    Operation op_;
    LacunarySeries first_;
    LacunarySeries second_;
};

struct CompositeConvergent {
    /// The combination of both partial sums, reduced.
    Convergent reduced;
    /// q_{n,1} q_{n,2}, or q_{n,1} p_{n,2} for a quotient.
    Integer paired_denominator;
};

/// value(c) truncated toward zero to `digits` places, from enclosures of growing depth.
/// PrecisionUnattainable when the materialization budget runs out first.
std::string decimal_digits(const CompositeNumber& c, unsigned digits);

CompositeConvergent composite_convergent(const CompositeNumber& c, std::size_t n);

/// Certified upper bound on |value(c) - theta_n| with g = min(g1, g2), A = a_{n+1}:
///   sum, difference:  4 / g^A
///   product:          2(1 + theta1 + theta2) / g^A
///   quotient (n>=2):  (2 + 4 g2^{a_1}) / theta2 / g^A
/// theta-dependent constants are replaced by enclosure endpoints on the safe side.
Rational gap_bound(const CompositeNumber& c, std::size_t n);

/// n + 2, clamped to the deepest materializable index. InsufficientDepth when that
/// index is not past n.
std::size_t default_depth(const CompositeNumber& c, std::size_t n);

/// Exact enclosure of |value(c) - theta_n| from component enclosures at `depth` terms.
RationalInterval true_gap_enclosure(const CompositeNumber& c, std::size_t n, std::size_t depth);

struct ThresholdCheck {
    std::size_t n;
    PurePower lhs;  // g^{a_{n+1} v}
    PurePower rhs;  // (g1 g2)^{a_n u}
    std::strong_ordering order;

    bool pass() const { return order > 0; }
};

struct ThresholdScan {
    std::vector<ThresholdCheck> checks;
    std::optional<std::size_t> n0;
    /// Every index from n0 to the end of the scan passes.
    bool persistent = false;
};

/// Scans g^{a_{n+1}} > (g1 g2)^{d a_n} for n = 1 .. n_max, with d = u/v cleared to
/// g^{a_{n+1} v} > (g1 g2)^{a_n u}. n0 is the first passing index, if any.
ThresholdScan find_n0(const CompositeNumber& c, const Rational& d, std::size_t n_max);

enum class RothOutcome { pass, fail, tie };
std::string_view to_string(RothOutcome outcome);

struct RothInstance {
    std::size_t n = 0;
    Rational d_eff;
    std::size_t depth = 0;
    RationalInterval gap;
    /// Reduced denominator of the composite convergent.
    Integer q;
    RothOutcome outcome = RothOutcome::fail;
    /// gap.hi * q^{d_eff}, rendered in decimal scientific notation.
    std::string margin;
};

/// pass iff gap.hi < q^{-d_eff}; gap.hi equal to the bound is a tie, which never
/// counts as a pass. nullopt while the enclosure straddles the bound.
std::optional<RothOutcome> classify_roth(const RationalInterval& gap, const Integer& q,
                                         const Rational& d_eff);

/// Decides gap.hi < q^{-d_eff} exactly (d_eff = u/v: gap.hi^v q^u < 1), deepening the
/// enclosure from default_depth while the enclosure straddles the bound.
RothInstance verify_roth_instance(const CompositeNumber& c, std::size_t n, const Rational& d_eff);

/// Enclosure of -ln(gap) / ln(q_n) at `depth`. InsufficientDepth when the gap
/// enclosure touches zero.
RationalInterval empirical_exponent(const CompositeNumber& c, std::size_t n, std::size_t depth);

enum class Decision { holds, fails, undecided };
std::string_view to_string(Decision decision);

struct WitnessRecord {
    std::size_t n = 0;
    std::optional<std::string> notice;
    std::optional<std::string> error;
    std::optional<std::string> error_kind;

    std::optional<CompositeConvergent> convergent;
    std::optional<Rational> gap_bound;
    std::optional<RationalInterval> gap;
    std::optional<std::size_t> depth;
    /// gap.hi <= gap_bound: the stated bound dominates the true gap.
    std::optional<bool> bound_dominates;
    std::optional<RothInstance> roth;
    std::optional<RationalInterval> exponent;

    // Quotient only: the two closing forms of the quotient argument, checked against d.
    std::optional<Decision> quotient_paired_q;   // gap < 4 / (q1 q2)^d
    std::optional<Decision> quotient_paired_p;   // gap < 4 (1 + theta2) / (q1 p2)^d
};

struct WitnessCertificate {
    Operation op = Operation::sum;
    Integer g1;
    Integer g2;
    Integer a1;
    Rational beta;
    Budget budget;
    Rational d;
    Rational d_eff;
    std::size_t n_from = 1;
    std::size_t n_to = 0;

    std::optional<ThresholdScan> threshold;
    std::optional<std::string> threshold_error;
    std::vector<WitnessRecord> records;

    /// Indices n >= n0 with a passing Roth instance.
    std::vector<std::size_t> witnesses;
    /// Every computed bound_dominates is true.
    bool sound = true;
};

/// Runs the whole chain for n_from .. n_to (empty when n_from > n_to). Indices are
/// evaluated concurrently; records are ordered by index. Errors are recorded per index.
WitnessCertificate certify(const CompositeNumber& c, const Rational& d, std::size_t n_from,
                           std::size_t n_to);

}  // namespace lacunary
