#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lacunary {

using Integer = mpz_class;
using Rational = mpq_class;

/// base^exp for a machine-sized exponent.
Integer ipow(const Integer& base, unsigned long exp);

/// Number of bits in |x|; zero has bit length 0.
std::size_t bit_length(const Integer& x);

/// Converts to unsigned long, throwing InvalidArgument when x does not fit.
unsigned long to_ulong(const Integer& x, std::string_view what);

/// Builds num/den in lowest terms.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "p/q" or "-p/q" in base 10. Throws InvalidArgument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a base-10 integer, throwing InvalidArgument on malformed input.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& x);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// x truncated toward zero to `digits` decimal places, e.g. "0.3125" or "-1.50".
std::string truncated_decimal(const Rational& x, unsigned digits);

/// Decimal scientific rendering with `significant` digits, e.g. "8.63617e-78".
std::string scientific(const Rational& x, unsigned significant = 6);

std::strong_ordering compare(const Rational& x, const Rational& y);

/// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational lo_, Rational hi_);

    static RationalInterval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RationalInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    /// Both endpoints strictly positive.
    bool positive() const { return lo > 0; }

    friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const Rational& x);
/// Product of two intervals with non-negative endpoints.
RationalInterval multiply_nonnegative(const RationalInterval& a, const RationalInterval& b);
/// a / b for a with non-negative endpoints and b strictly positive.
RationalInterval divide_positive(const RationalInterval& a, const RationalInterval& b);
/// { |x| : x in a }.
RationalInterval abs(const RationalInterval& a);

}  // namespace lacunary
