#include "lacunary/series.hpp"

#include "lacunary/errors.hpp"

namespace lacunary {

LacunarySeries::LacunarySeries(Integer base, PowerSchedule schedule)
    : base_(std::move(base)), schedule_(std::move(schedule)) {
    if (base_ < 2) throw InvalidArgument("series base must be >= 2, got " + to_string(base_));
}

Integer LacunarySeries::power(std::size_t n) const {
    if (!schedule_.materializable(n)) {
        throw ExponentBudgetExceeded(
            n, "g^a_" + std::to_string(n) + " exceeds the materialization budget (a_n <= 2^" +
                   std::to_string(schedule_.budget().materialize_bits) + ")");
    }
    return ipow(base_, schedule_.exponent(n).get_ui());
}

Rational LacunarySeries::inverse_power(const Integer& e) const {
    if (e > schedule_.materialize_ceiling()) {
        throw ExponentBudgetExceeded(0, "g^" + to_string(e) + " exceeds the materialization budget");
    }
    return Rational(Integer(1), ipow(base_, e.get_ui()));
}

Convergent partial_sum(const LacunarySeries& s, std::size_t n) {
    if (n == 0) throw InvalidArgument("partial_sum index starts at 1");
    if (!s.schedule().materializable(n)) s.power(n);  // raises the budget error
    const std::vector<Integer> exps = s.schedule().exponents(n);

    Integer numerator = 1;
    for (std::size_t k = 1; k < exps.size(); ++k) {
        const unsigned long step = Integer(exps[k] - exps[k - 1]).get_ui();
        numerator = numerator * ipow(s.base(), step) + 1;
    }
    Integer denominator = ipow(s.base(), exps.back().get_ui());

    Integer g;
    mpz_gcd(g.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    if (g != 1) {
        numerator /= g;
        denominator /= g;
    }
    return {n, std::move(numerator), std::move(denominator)};
}

TailSandwich tail_sandwich(const LacunarySeries& s, std::size_t n) {
    const Rational term = Rational(Integer(1), s.power(n + 1));
    return {term, 2 * term};
}

Rational rigorous_tail_upper(const LacunarySeries& s, std::size_t n) {
    const PowerSchedule& schedule = s.schedule();
    Integer e = schedule.materialize_ceiling();
    if (schedule.materializable(n + 1)) e = schedule.exponent(n + 1);
    const Rational ratio = make_rational(s.base(), s.base() - 1);
    return ratio * s.inverse_power(e);
}

RationalInterval enclose(const LacunarySeries& s, std::size_t n_terms) {
    const Rational lo = partial_sum(s, n_terms).value();
    return {lo, lo + rigorous_tail_upper(s, n_terms)};
}

std::string decimal_digits(const LacunarySeries& s, unsigned digits) {
    if (digits == 0) throw InvalidArgument("digits must be positive");
    for (std::size_t n = 1;; ++n) {
        if (!s.schedule().materializable(n)) break;
        const RationalInterval box = enclose(s, n);
        std::string lo = truncated_decimal(box.lo, digits);
        if (lo == truncated_decimal(box.hi, digits)) return lo;
    }
    throw PrecisionUnattainable("cannot resolve " + std::to_string(digits) +
                                " digits within the materialization budget");
}

}  // namespace lacunary
