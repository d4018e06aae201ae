#pragma once

#include <cstddef>
#include <string>

#include "lacunary/rational.hpp"
#include "lacunary/schedule.hpp"

namespace lacunary {

/// theta = sum_{n>=1} g^{-a_n}. Only the base and the (shared) schedule are stored;
/// partial sums and bounds are materialized on demand.
class LacunarySeries {
public:
    LacunarySeries(Integer base, PowerSchedule schedule);

    const Integer& base() const { return base_; }
    const PowerSchedule& schedule() const { return schedule_; }

    /// g^{a_n}. Throws ExponentBudgetExceeded past the materialization budget.
    Integer power(std::size_t n) const;

    /// g^{-e} as an exact rational for an explicit exponent e <= 2^materialize_bits.
    Rational inverse_power(const Integer& e) const;

private:
    Integer base_;
    PowerSchedule schedule_;
};

/// p/q in lowest terms with q > 0.
struct Convergent {
    std::size_t n = 0;
    Integer p;
    Integer q;

    Rational value() const { return make_rational(p, q); }
};

/// sum_{k<=n} g^{-a_k} reduced. The numerator is built by Horner steps over the
/// sparse exponent set: sum_k g^{a_n - a_k}.
Convergent partial_sum(const LacunarySeries& s, std::size_t n);

struct TailSandwich {
    Rational lower;
    Rational upper;
};

/// (g^{-a_{n+1}}, 2 g^{-a_{n+1}}): the classical two-sided bound on theta - theta_n.
TailSandwich tail_sandwich(const LacunarySeries& s, std::size_t n);

/// Certified upper bound g/(g-1) * g^{-e} on theta - theta_n, with e = a_{n+1}. When
/// a_{n+1} is past the materialization ceiling C the exponent is clamped to C, which
/// keeps the bound valid (C < a_{n+1}) while keeping it representable.
Rational rigorous_tail_upper(const LacunarySeries& s, std::size_t n);

/// [theta_n, theta_n + rigorous_tail_upper(s, n)], which contains theta.
RationalInterval enclose(const LacunarySeries& s, std::size_t n_terms);

/// theta truncated toward zero to `digits` places. Enclosures are deepened until both
/// endpoints truncate to the same string; PrecisionUnattainable when the budget ends first.
std::string decimal_digits(const LacunarySeries& s, unsigned digits);

}  // namespace lacunary
