#include "lacunary/measure.hpp"

#include "lacunary/errors.hpp"
#include "lacunary/powercmp.hpp"

namespace lacunary {

AlgebraicTarget::AlgebraicTarget(unsigned degree_, Integer height_, std::optional<RationalInterval> value_)
    : degree(degree_), height(std::move(height_)), value(std::move(value_)) {
    if (degree < 2) throw InvalidArgument("degree must be >= 2, got " + std::to_string(degree));
    if (height < 1) throw InvalidArgument("height must be >= 1, got " + to_string(height));
}

Integer AlgebraicTarget::scale() const {
    return 2 * height * degree * degree;
}

Integer naive_height(std::span<const Integer> coeffs) {
    Integer h = 0;
    for (const Integer& c : coeffs) {
        const Integer a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

Rational liouville_gap_bound(const AlgebraicTarget& t, const Integer& q) {
    if (q < 1) throw InvalidArgument("q must be >= 1");
    return Rational(Integer(1), t.height * t.degree * t.degree * ipow(q, t.degree));
}

std::string_view to_string(BracketStatus status) {
    switch (status) {
        case BracketStatus::found: return "found";
        case BracketStatus::not_found: return "not_found";
        case BracketStatus::tie: return "tie";
    }
    return "unknown";
}

std::string_view to_string(TargetStatus status) {
    switch (status) {
        case TargetStatus::pass: return "pass";
        case TargetStatus::fail: return "fail";
        case TargetStatus::indeterminate: return "indeterminate";
    }
    return "unknown";
}

BracketResult find_n1(const CompositeNumber& c, const AlgebraicTarget& t, std::size_t n_max) {
    BracketResult result;
    result.scale = t.scale();
    const Integer combined = c.first().base() * c.second().base();
    const Rational squared(result.scale * result.scale);

    for (std::size_t n = 1; n <= n_max; ++n) {
        BracketEvidence e;
        e.n = n;
        e.left = power_vs_threshold(PurePower(combined, c.schedule().exponent(n)), squared);
        if (e.left == 0) {
            result.evidence.push_back(e);
            result.status = BracketStatus::tie;
            result.tie_index = n;
            return result;
        }
        if (e.left > 0) {
            // (g1 g2)^{a_n} only grows with n.
            result.evidence.push_back(e);
            return result;
        }
        e.right = power_vs_threshold(PurePower(combined, c.schedule().exponent(n + 1)), squared);
        result.evidence.push_back(e);
        if (*e.right > 0) {
            result.status = BracketStatus::found;
            result.n1 = n;
            return result;
        }
        if (*e.right == 0) {
            result.status = BracketStatus::tie;
            result.tie_index = n + 1;
            return result;
        }
    }
    return result;
}

SufficiencyCheck check_sufficiency(const CompositeNumber& c, const AlgebraicTarget& t, std::size_t n) {
    const Integer combined = c.first().base() * c.second().base();
    const Integer current = c.schedule().exponent(n);
    const Integer next = c.schedule().exponent(n + 1);
    SufficiencyCheck out;
    out.n = n;
    out.growth_condition = next > 2 * t.degree * current;
    // (g1g2)^{a_{n+1} - d a_n} > 2Hd^2; a non-positive exponent leaves at most 1 < 2Hd^2.
    const Integer excess = next - t.degree * current;
    out.gap_condition = excess > 0 &&
                        power_vs_threshold(PurePower(combined, excess), Rational(t.scale())) > 0;
    return out;
}

MeasureBound approximation_measure(const AlgebraicTarget& t) {
    const Integer scale = t.scale();
    const unsigned long power = 1 + 4UL * t.degree;
    const Integer denominator = ipow(scale, power);
    MeasureBound out;
    out.bound = Rational(Integer(1), denominator);
    out.trace.push_back("2Hd^2 = 2*" + to_string(t.height) + "*" + std::to_string(t.degree) +
                        "^2 = " + to_string(scale));
    out.trace.push_back("1+4d = " + std::to_string(power));
    out.trace.push_back("bound = 1/(" + to_string(scale) + ")^" + std::to_string(power));
    out.trace.push_back("denominator = " + to_string(denominator));
    return out;
}

TargetCheck check_against_target(const CompositeNumber& c, const AlgebraicTarget& t, std::size_t depth) {
    if (!t.value) throw InvalidArgument("target has no value enclosure");
    if (depth == 0) throw InsufficientDepth("enclosure depth must be at least 1");
    TargetCheck out;
    out.bound = approximation_measure(t).bound;
    out.value = c.enclose(depth);
    const RationalInterval& xi = *t.value;
    if (xi.hi < out.value.lo) {
        out.distance = out.value.lo - xi.hi;
    } else if (out.value.hi < xi.lo) {
        out.distance = xi.lo - out.value.hi;
    } else {
        out.status = TargetStatus::indeterminate;
        return out;
    }
    out.status = *out.distance > out.bound ? TargetStatus::pass : TargetStatus::fail;
    return out;
}

Rational evaluate(std::span<const Integer> coeffs, const Rational& x) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

RationalInterval root_enclosure(std::span<const Integer> coeffs, const RationalInterval& bracket,
                                const Rational& width) {
    if (width <= 0) throw InvalidArgument("width must be positive");
    Rational lo = bracket.lo;
    Rational hi = bracket.hi;
    const int sign_lo = sgn(evaluate(coeffs, lo));
    const int sign_hi = sgn(evaluate(coeffs, hi));
    if (sign_lo == 0) return RationalInterval::point(lo);
    if (sign_hi == 0) return RationalInterval::point(hi);
    if (sign_lo == sign_hi) {
        throw NoSignChange("polynomial has the same sign at " + to_string(lo) + " and " + to_string(hi));
    }
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        const int s = sgn(evaluate(coeffs, mid));
        if (s == 0) return RationalInterval::point(mid);
        if (s == sign_lo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return {lo, hi};
}

}  // namespace lacunary
