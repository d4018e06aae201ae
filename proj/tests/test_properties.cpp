#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lacunary/errors.hpp"
#include "lacunary/measure.hpp"
#include "lacunary/powercmp.hpp"
#include "lacunary/series.hpp"
#include "lacunary/witness.hpp"
#include "oracles.hpp"

using namespace lacunary;
using std::strong_ordering;

namespace {

Integer random_u64(std::mt19937_64& rng) {
    Integer x;
    const std::uint64_t v = rng();
    mpz_import(x.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return x;
}

}  // namespace

TEST_CASE("non-integral steps agree with the root oracle") {
    std::mt19937_64 rng(20240611);
    int integral = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned long v = 1 + rng() % 4;
        unsigned long u = 1 + rng() % 5;
        while (std::gcd(u, v) != 1) ++u;
        Integer a1;
        if (trial % 2 == 0) {
            // A perfect v-th power below 2^64.
            const unsigned long bits = 62 / v;
            a1 = ipow(Integer(2 + rng() % ((1UL << bits) - 2)), v);
        } else {
            a1 = random_u64(rng);
        }
        if (a1 < 2) a1 = 2;

        const PowerSchedule s(a1, Rational(u, v));
        const auto ref = oracle::schedule(a1, u, v, 2);
        if (ref) {
            ++integral;
            CHECK(s.exponent(2) == (*ref)[1]);
        } else {
            CHECK_THROWS_AS(s.exponent(2), NonIntegralExponent);
        }
    }
    CHECK(integral >= 50);
}

TEST_CASE("schedules are strictly increasing and satisfy the recurrence") {
    for (int a1 = 2; a1 <= 7; ++a1) {
        for (unsigned long u : {1UL, 2UL, 3UL}) {
            const PowerSchedule s(a1, Rational(u));
            const auto a = s.exponents(4);
            for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                CHECK(a[i + 1] > a[i]);
                CHECK(a[i + 1] == ipow(a[i], u + 1));
            }
            CHECK(s.exponents(4) == a);
        }
    }
}

TEST_CASE("reduced denominators and raw numerators") {
    for (int g = 2; g <= 7; ++g) {
        for (int a1 : {2, 3, 4}) {
            const LacunarySeries s(g, PowerSchedule(a1, 1));
            for (std::size_t n = 1; n <= 3; ++n) {
                const Convergent c = partial_sum(s, n);
                const Integer an = s.schedule().exponent(n);
                if (an > 4096) break;
                CHECK(c.q == s.power(n));
                CHECK(gcd(c.p, c.q) == 1);
                Integer raw = 0;
                for (std::size_t k = 1; k <= n; ++k) {
                    raw += ipow(g, to_ulong(an - s.schedule().exponent(k), "e"));
                }
                CHECK(raw % g == 1 % g);
            }
        }
    }
}

TEST_CASE("enclosures contain later partial sums and nest") {
    for (int g : {2, 3, 10}) {
        const LacunarySeries s(g, PowerSchedule(2, 1));
        for (std::size_t n = 1; n <= 3; ++n) {
            const RationalInterval box = enclose(s, n);
            CHECK(box.contains(enclose(s, n + 1)));
            for (std::size_t m = n + 1; m <= 4; ++m) CHECK(box.contains(partial_sum(s, m).value()));
            const TailSandwich t = tail_sandwich(s, n);
            CHECK(rigorous_tail_upper(s, n) <= t.upper);
        }
    }
}

TEST_CASE("decimal expansions are prefixes of longer ones") {
    const LacunarySeries s(7, PowerSchedule(3, 1));
    const std::string full = decimal_digits(s, 40);
    for (unsigned d = 1; d < 40; d += 7) CHECK(full.rfind(decimal_digits(s, d), 0) == 0);
}

TEST_CASE("random comparisons agree with materialization") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned long b1 = 2 + rng() % 63, b2 = 2 + rng() % 63;
        const unsigned long e1 = rng() % 4097, e2 = rng() % 4097;
        const auto got = compare(PurePower(b1, e1), PurePower(b2, e2));
        CHECK(got == oracle::materialized_compare(b1, e1, b2, e2));
        if (const auto f = oracle::float_log_compare(b1, e1, b2, e2)) CHECK(got == *f);
        CHECK(compare(PurePower(b2, e2), PurePower(b1, e1)) == 0 <=> got);
    }
}

TEST_CASE("transitivity over sampled triples") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const PurePower x(2 + rng() % 30, rng() % 2000);
        const PurePower y(2 + rng() % 30, rng() % 2000);
        const PurePower z(2 + rng() % 30, rng() % 2000);
        if (compare(x, y) <= 0 && compare(y, z) <= 0) CHECK(compare(x, z) <= 0);
        if (compare(x, y) >= 0 && compare(y, z) >= 0) CHECK(compare(x, z) >= 0);
    }
}

TEST_CASE("thresholds agree with materialization") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned long b = 2 + rng() % 20, e = rng() % 200;
        const Rational t(Integer(1 + rng() % 100000) * ipow(b, rng() % 150), 1 + rng() % 1000);
        const Rational x(ipow(b, e));
        const auto expected = x < t ? strong_ordering::less : (x > t ? strong_ordering::greater : strong_ordering::equal);
        CHECK(power_vs_threshold(PurePower(b, e), t) == expected);
    }
}

TEST_CASE("soundness chain for every operation") {
    for (Operation op : {Operation::sum, Operation::difference, Operation::product, Operation::quotient}) {
        const PowerSchedule s(2, 1);
        const CompositeNumber c(op, LacunarySeries(5, s), LacunarySeries(3, s));
        const WitnessCertificate cert = certify(c, 3, 2, 4);
        CHECK(cert.sound);
        for (const auto& r : cert.records) {
            REQUIRE(r.gap);
            REQUIRE(r.gap_bound);
            CHECK(r.gap->hi <= *r.gap_bound);
            if (cert.threshold && cert.threshold->n0) {
                for (std::size_t w : cert.witnesses) CHECK(w >= *cert.threshold->n0);
            }
        }
    }
}

TEST_CASE("empirical exponents grow") {
    const PowerSchedule s(2, 1);
    const CompositeNumber c(Operation::sum, LacunarySeries(2, s), LacunarySeries(3, s));
    Rational previous = -1;
    for (std::size_t n = 1; n <= 4; ++n) {
        const RationalInterval e = empirical_exponent(c, n, default_depth(c, n));
        CHECK(e.lo > previous);
        if (n >= 3) CHECK(e.lo > 2);
        previous = e.lo;
    }
}

TEST_CASE("measure denominators factor as 2, H and d powers") {
    for (unsigned d = 2; d <= 6; ++d) {
        for (int h = 1; h <= 6; ++h) {
            const Rational b = approximation_measure(AlgebraicTarget(d, h)).bound;
            const unsigned long p = 1 + 4 * d;
            CHECK(b == Rational(1, ipow(2, p) * ipow(h, p) * ipow(d, 2 * p)));
        }
    }
}
