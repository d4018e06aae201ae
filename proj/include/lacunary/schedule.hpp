#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "lacunary/rational.hpp"

namespace lacunary {

/// Size limits for everything derived from a schedule.
struct Budget {
    /// Exponents are generated while a_n <= 2^exponent_bits. They are only ever used
    /// symbolically past the materialization limit, so this can be generous.
    unsigned exponent_bits = 1024;
    /// g^{a_n} is materialized as an integer only while a_n <= 2^materialize_bits.
    unsigned materialize_bits = 20;
};

/// The exponent sequence a_1 >= 2, a_{n+1} = a_n^{1+beta} for rational beta > 0.
///
/// Copies share one lazily grown cache, so two series built from copies of the same
/// schedule use literally the same exponents. The cache is guarded by a mutex and is
/// only ever appended to; values already returned never change.
class PowerSchedule {
public:
    PowerSchedule(Integer first, Rational beta, Budget budget = {});

    const Integer& first() const;
    const Rational& beta() const;
    const Budget& budget() const;

    /// a_n for n >= 1. Throws NonIntegralExponent when some a_m, m <= n, is not an
    /// integer and ExponentBudgetExceeded when a_n > 2^exponent_bits.
    Integer exponent(std::size_t n) const;

    /// a_1 ... a_n.
    std::vector<Integer> exponents(std::size_t n) const;

    /// 2^materialize_bits, the largest exponent this schedule lets a series materialize.
    Integer materialize_ceiling() const;

    /// Whether a_n <= 2^materialize_bits. An exponent past the exponent budget is
    /// reported as not materializable; a non-integral step still throws.
    bool materializable(std::size_t n) const;

    /// Largest n with a_n materializable (0 when even a_1 is not), probing no further
    /// than `limit`.
    std::size_t last_materializable(std::size_t limit = 64) const;

    std::size_t cached_terms() const;

    /// True when both handles share one cache (the same schedule object).
    bool same_schedule(const PowerSchedule& other) const { return state_ == other.state_; }

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// The window a_n^alpha <= a_{n+1} < a_n^{k*alpha} with rational alpha, k > 1.
struct GrowthWindow {
    Rational alpha;
    Rational k;

    GrowthWindow(Rational alpha_, Rational k_);
};

struct GrowthCheck {
    std::size_t n = 0;
    /// a_n^alpha against a_{n+1}; the lower bound holds when this is not greater.
    std::strong_ordering lower = std::strong_ordering::equal;
    /// a_{n+1} against a_n^{k*alpha}; the upper bound holds when this is less.
    std::strong_ordering upper = std::strong_ordering::equal;

    bool lower_holds() const { return lower <= 0; }
    bool upper_holds() const { return upper < 0; }
    bool holds() const { return lower_holds() && upper_holds(); }
};

struct GrowthReport {
    std::vector<GrowthCheck> checks;
    std::vector<std::size_t> failing;

    bool all_pass() const { return failing.empty(); }
};

/// Decides both window inequalities exactly for n = 1 .. n_max. Rational powers are
/// cleared: a_n^{p/q} <= a_{n+1}  <=>  a_n^p <= a_{n+1}^q.
GrowthReport validate_growth(const PowerSchedule& schedule, const GrowthWindow& window,
                             std::size_t n_max);

}  // namespace lacunary
