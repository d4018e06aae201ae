#pragma once

// Reference implementations that share no code path with the library: plain binary
// search for roots, term-by-term rational summation, direct materialization and
// long double logarithms. Values that need more than that are frozen constants.

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= b;
    return r;
}

/// x^{1/k} when x is a perfect k-th power, by bisection on [0, x].
inline std::optional<mpz_class> exact_root(const mpz_class& x, unsigned long k) {
    mpz_class lo = 0, hi = x;
    while (lo <= hi) {
        mpz_class mid = (lo + hi) / 2;
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mid.get_mpz_t(), k);
        if (p == x) return mid;
        if (p < x) lo = mid + 1; else hi = mid - 1;
    }
    return std::nullopt;
}

/// a_1 .. a_n for a_{m+1} = a_m^{(u+v)/v}; nullopt when a step is not integral.
inline std::optional<std::vector<mpz_class>> schedule(const mpz_class& a1, unsigned long u,
                                                      unsigned long v, std::size_t n) {
    std::vector<mpz_class> a{a1};
    while (a.size() < n) {
        auto r = exact_root(a.back(), v);
        if (!r) return std::nullopt;
        mpz_class next;
        mpz_pow_ui(next.get_mpz_t(), r->get_mpz_t(), u + v);
        a.push_back(next);
    }
    return a;
}

/// sum of g^{-e} over the given exponents, added one fraction at a time.
inline mpq_class direct_sum(const mpz_class& g, const std::vector<unsigned long>& exps) {
    mpq_class s = 0;
    for (unsigned long e : exps) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), g.get_mpz_t(), e);
        mpq_class term(1, p);
        term.canonicalize();
        s += term;
    }
    return s;
}

inline std::strong_ordering materialized_compare(unsigned long b1, unsigned long e1, unsigned long b2,
                                                 unsigned long e2) {
    mpz_class x, y;
    mpz_ui_pow_ui(x.get_mpz_t(), b1, e1);
    mpz_ui_pow_ui(y.get_mpz_t(), b2, e2);
    const int c = cmp(x, y);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Floating comparison of e1 ln b1 against e2 ln b2; nullopt when too close to call.
inline std::optional<std::strong_ordering> float_log_compare(double b1, double e1, double b2, double e2) {
    const long double x = static_cast<long double>(e1) * std::log(static_cast<long double>(b1));
    const long double y = static_cast<long double>(e2) * std::log(static_cast<long double>(b2));
    const long double slack = 1e-12L * (std::fabs(x) + std::fabs(y)) + 1e-12L;
    if (x < y - slack) return std::strong_ordering::less;
    if (x > y + slack) return std::strong_ordering::greater;
    return std::nullopt;
}

// Continued-fraction convergents p/q of log2(3), with the sign of q ln 3 - p ln 2
// taken from a 200-digit evaluation. 3^q and 2^p agree to about 20 significant
// digits of their logarithms; the last two are closer than 64 fractional bits resolve.
struct NearTie {
    const char* exp3;
    const char* exp2;
    int sign;
    /// 1 when |q ln 3 - p ln 2| > 2^-70, else at least 2 refinement rounds.
    int min_rounds;
};
inline constexpr NearTie kLog2Of3Ties[] = {
    {"22803850947114245497", "36143248623210700400", +1, 1},      // 1.68e-20
    {"27444133206411171953", "43497921996957973433", -1, 1},      // -1.01e-20
    {"205632218873398596256", "325919355854421968365", -1, 2},    // -8.90e-23
    {"7736332199829210068325", "12261796429850908150604", +1, 2}, // 2.22e-23
};

// High-precision reference values for the example (g1 = 2, g2 = 3, a1 = 2, a_{n+1} = a_n^2).
inline constexpr double kSumGap[] = {0.074860961, 1.528202e-5, 8.6361686e-78};
inline constexpr double kSumExponent[] = {0.723345622943, 1.54719896815, 6.18964491575, 99.034318652};

}  // namespace oracle
