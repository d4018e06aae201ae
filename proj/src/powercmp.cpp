#include "lacunary/powercmp.hpp"

#include <algorithm>
#include <utility>

#include "detail/mpfr_float.hpp"
#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

constexpr long kStartFractionBits = 64;
constexpr long kMaxPrecisionBits = 1L << 26;
// b^e is evaluated outright when it has at most this many bits.
constexpr std::size_t kMaterializeBits = std::size_t{1} << 22;

std::strong_ordering order_of(int c) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Multiplicity of `prime_like` in `x`; x is reduced in place.
Integer valuation(Integer& x, const Integer& factor) {
    Integer count;
    const mp_bitcnt_t v = mpz_remove(x.get_mpz_t(), x.get_mpz_t(), factor.get_mpz_t());
    count = static_cast<unsigned long>(v);
    return count;
}

std::vector<Integer> valuations(const Integer& value, const std::vector<Integer>& basis) {
    Integer rest = value;
    std::vector<Integer> out;
    out.reserve(basis.size());
    for (const Integer& c : basis) out.push_back(valuation(rest, c));
    if (rest != 1) throw InvariantViolation("coprime basis does not cover " + to_string(value));
    return out;
}

/// Bits of the integer part of e*ln(b), with slack.
long integer_bits(const Integer& e, const Integer& b) {
    return static_cast<long>(bit_length(e) + bit_length(Integer(bit_length(b))) + 4);
}

/// Encloses e*ln(b) at the given precision.
void scaled_log(const PurePower& x, detail::Float& lo, detail::Float& hi) {
    detail::log_bounds(x.base, lo, hi);
    // ln(b) > 0 because b >= 2, so rounding the product outward keeps the order.
    mpfr_mul_z(lo.get(), lo.get(), x.exp.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), hi.get(), x.exp.get_mpz_t(), MPFR_RNDU);
}

void threshold_log(const Rational& t, detail::Float& lo, detail::Float& hi) {
    detail::log_bounds(t, lo, hi);
}

/// Refines two enclosures until they separate. `fill_x` / `fill_y` fill lower and upper
/// endpoints at the current precision.
template <typename FillX, typename FillY>
ComparisonTrace separate_logs(long integer_part, FillX fill_x, FillY fill_y) {
    ComparisonTrace trace;
    trace.method = CompareMethod::log_enclosure;
    for (long fraction = kStartFractionBits;; fraction *= 2) {
        const long precision = integer_part + fraction;
        if (precision > kMaxPrecisionBits) {
            throw InvariantViolation("logarithm enclosures failed to separate unequal powers");
        }
        trace.precisions.push_back(precision);
        detail::Float x_lo(precision), x_hi(precision), y_lo(precision), y_hi(precision);
        fill_x(x_lo, x_hi);
        fill_y(y_lo, y_hi);
        if (mpfr_less_p(x_hi.get(), y_lo.get())) {
            trace.order = std::strong_ordering::less;
            return trace;
        }
        if (mpfr_greater_p(x_lo.get(), y_hi.get())) {
            trace.order = std::strong_ordering::greater;
            return trace;
        }
    }
}

}  // namespace

PurePower::PurePower(Integer base_, Integer exp_) : base(std::move(base_)), exp(std::move(exp_)) {
    if (base < 2) throw InvalidArgument("pure power base must be >= 2, got " + to_string(base));
    if (exp < 0) throw InvalidArgument("pure power exponent must be >= 0, got " + to_string(exp));
}

std::string_view to_string(CompareMethod method) {
    switch (method) {
        case CompareMethod::trivial: return "trivial";
        case CompareMethod::common_base: return "common_base";
        case CompareMethod::exact_equal: return "exact_equal";
        case CompareMethod::materialized: return "materialized";
        case CompareMethod::log_enclosure: return "log_enclosure";
    }
    return "unknown";
}

std::string_view to_string(std::strong_ordering order) {
    if (order < 0) return "less";
    if (order > 0) return "greater";
    return "equal";
}

std::vector<Integer> coprime_basis(const Integer& a, const Integer& b) {
    std::vector<Integer> basis;
    if (a > 1) basis.push_back(a);
    if (b > 1) basis.push_back(b);
    // Replace any pair sharing a factor g by g, x/g, y/g until pairwise coprime. The
    // product of the list strictly decreases, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), basis[i].get_mpz_t(), basis[j].get_mpz_t());
                if (g == 1) continue;
                Integer x = basis[i] / g;
                Integer y = basis[j] / g;
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                basis.push_back(g);
                if (x > 1) basis.push_back(std::move(x));
                if (y > 1) basis.push_back(std::move(y));
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

ComparisonTrace compare_traced(const PurePower& x, const PurePower& y) {
    ComparisonTrace trace;
    if (x.exp == 0 || y.exp == 0) {
        // 1 against something >= 1
        trace.order = order_of(sgn(x.exp) - sgn(y.exp));
        return trace;
    }

    const std::vector<Integer> basis = coprime_basis(x.base, y.base);
    const std::vector<Integer> vx = valuations(x.base, basis);
    const std::vector<Integer> vy = valuations(y.base, basis);

    if (basis.size() == 1) {
        trace.method = CompareMethod::common_base;
        trace.order = order_of(cmp(Integer(vx[0] * x.exp), Integer(vy[0] * y.exp)));
        return trace;
    }

    bool proportional = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (vx[i] * x.exp != vy[i] * y.exp) {
            proportional = false;
            break;
        }
    }
    if (proportional) {
        trace.method = CompareMethod::exact_equal;
        trace.order = std::strong_ordering::equal;
        return trace;
    }

    const long integer_part = std::max(integer_bits(x.exp, x.base), integer_bits(y.exp, y.base));
    return separate_logs(
        integer_part, [&](detail::Float& lo, detail::Float& hi) { scaled_log(x, lo, hi); },
        [&](detail::Float& lo, detail::Float& hi) { scaled_log(y, lo, hi); });
}

std::strong_ordering compare(const PurePower& x, const PurePower& y) {
    return compare_traced(x, y).order;
}

ComparisonTrace power_vs_threshold_traced(const PurePower& x, const Rational& t) {
    if (t <= 0) throw InvalidArgument("threshold must be positive");
    ComparisonTrace trace;
    const Integer& num = t.get_num();
    const Integer& den = t.get_den();

    if (x.exp == 0) {
        trace.order = order_of(cmp(den, num));
        return trace;
    }

    const std::size_t threshold_bits = bit_length(num) + bit_length(den);
    const std::size_t limit = std::max(kMaterializeBits, 2 * threshold_bits + 64);
    const Integer estimate = x.exp * static_cast<unsigned long>(bit_length(x.base));
    if (estimate <= limit) {
        trace.method = CompareMethod::materialized;
        const Integer value = ipow(x.base, x.exp.get_ui()) * den;
        trace.order = order_of(cmp(value, num));
        return trace;
    }

    // Here b^e has more than twice as many bits as num*den, so it cannot equal t.
    const long integer_part = std::max(integer_bits(x.exp, x.base),
                                       static_cast<long>(bit_length(Integer(threshold_bits)) + 4));
    return separate_logs(
        integer_part, [&](detail::Float& lo, detail::Float& hi) { scaled_log(x, lo, hi); },
        [&](detail::Float& lo, detail::Float& hi) { threshold_log(t, lo, hi); });
}

std::strong_ordering power_vs_threshold(const PurePower& x, const Rational& t) {
    return power_vs_threshold_traced(x, t).order;
}

RationalInterval log_enclosure(const Rational& x, long precision_bits) {
    if (x <= 0) throw InvalidArgument("log_enclosure: argument must be positive");
    detail::Float lo(precision_bits), hi(precision_bits);
    detail::log_bounds(x, lo, hi);
    return {detail::to_rational(lo), detail::to_rational(hi)};
}

}  // namespace lacunary
