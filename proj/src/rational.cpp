#include "lacunary/rational.hpp"

#include <cctype>
#include <cstdio>
#include <string>
#include <vector>

#include "detail/mpfr_float.hpp"
#include "lacunary/errors.hpp"

namespace lacunary {

Integer ipow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

std::size_t bit_length(const Integer& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

unsigned long to_ulong(const Integer& x, std::string_view what) {
    if (x < 0 || !x.fits_ulong_p()) {
        throw InvalidArgument(std::string(what) + " does not fit in an unsigned long: " +
                              to_string(x));
    }
    return x.get_ui();
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
    Integer out(std::string(body), 10);
    return negative ? Integer(-out) : out;
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw InvalidArgument("not a rational: '" + std::string(text) + "'");
    }
    const Integer den(std::string(den_text), 10);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str(10);
    return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

std::string truncated_decimal(const Rational& x, unsigned digits) {
    const bool negative = x < 0;
    const Integer scale = ipow(Integer(10), digits);
    Integer scaled = abs(x.get_num()) * scale;
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());

    std::string body = scaled.get_str(10);
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out = negative ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

std::string scientific(const Rational& x, unsigned significant) {
    if (x == 0) return "0";
    const mpfr_prec_t precision =
        static_cast<mpfr_prec_t>(64 + 4 * static_cast<mpfr_prec_t>(significant));
    detail::Float value(precision);
    mpfr_set_q(value.get(), x.get_mpq_t(), MPFR_RNDN);
    std::vector<char> buffer(64 + significant);
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re",
                  static_cast<int>(significant > 0 ? significant - 1 : 0), value.get());
    return std::string(buffer.data());
}

std::strong_ordering compare(const Rational& x, const Rational& y) {
    const int c = cmp(x, y);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

RationalInterval::RationalInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw InvalidArgument("interval with lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator-(const RationalInterval& a, const Rational& x) {
    return {a.lo - x, a.hi - x};
}

RationalInterval multiply_nonnegative(const RationalInterval& a, const RationalInterval& b) {
    if (a.lo < 0 || b.lo < 0) throw InvalidArgument("multiply_nonnegative: negative endpoint");
    return {a.lo * b.lo, a.hi * b.hi};
}

RationalInterval divide_positive(const RationalInterval& a, const RationalInterval& b) {
    if (a.lo < 0) throw InvalidArgument("divide_positive: negative numerator endpoint");
    if (b.lo <= 0) throw InvalidArgument("divide_positive: divisor interval not positive");
    return {a.lo / b.hi, a.hi / b.lo};
}

RationalInterval abs(const RationalInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return {-a.hi, -a.lo};
    const Rational neg = -a.lo;
    return {Rational(0), neg > a.hi ? neg : a.hi};
}

}  // namespace lacunary
