#include "lacunary/witness.hpp"

#include <algorithm>
#include <future>
#include <typeinfo>

#include "detail/mpfr_float.hpp"
#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

constexpr long kMinLogPrecision = 128;
constexpr long kMaxLogPrecision = 4096;

/// x^e for rational x.
Rational rpow(const Rational& x, unsigned long e) {
    return Rational(ipow(x.get_num(), e), ipow(x.get_den(), e));
}

/// Orders x against scale^{-u/v}, i.e. x^v * scale^u against 1.
std::strong_ordering against_inverse_power(const Rational& x, const Integer& scale,
                                           const Rational& exponent) {
    const unsigned long u = to_ulong(exponent.get_num(), "exponent numerator");
    const unsigned long v = to_ulong(exponent.get_den(), "exponent denominator");
    const Rational lhs = rpow(x, v) * ipow(scale, u);
    return compare(lhs, Rational(1));
}

/// Decides gap < rhs where rhs = numerator / scale^d, numerator given as an interval.
Decision decide_scaled(const RationalInterval& gap, const RationalInterval& numerator,
                       const Integer& scale, const Rational& d) {
    const unsigned long u = to_ulong(d.get_num(), "d numerator");
    const unsigned long v = to_ulong(d.get_den(), "d denominator");
    const Integer scale_u = ipow(scale, u);
    // gap < N / s^{u/v}  <=>  gap^v s^u < N^v
    if (rpow(gap.hi, v) * scale_u < rpow(numerator.lo, v)) return Decision::holds;
    if (rpow(gap.lo, v) * scale_u >= rpow(numerator.hi, v)) return Decision::fails;
    return Decision::undecided;
}

std::string render_margin(const Rational& gap_hi, const Integer& q, const Rational& d_eff) {
    if (gap_hi == 0) return "0";
    constexpr mpfr_prec_t precision = 128;
    detail::Float x(precision), scale(precision), exponent(precision);
    mpfr_set_q(x.get(), gap_hi.get_mpq_t(), MPFR_RNDN);
    mpfr_set_z(scale.get(), q.get_mpz_t(), MPFR_RNDN);
    mpfr_set_q(exponent.get(), d_eff.get_mpq_t(), MPFR_RNDN);
    mpfr_pow(scale.get(), scale.get(), exponent.get(), MPFR_RNDN);
    mpfr_mul(x.get(), x.get(), scale.get(), MPFR_RNDN);
    char buffer[96];
    mpfr_snprintf(buffer, sizeof buffer, "%.5Re", x.get());
    return buffer;
}

void check_d(const Rational& d, std::string_view name) {
    if (d <= 2) throw InvalidArgument(std::string(name) + " must be > 2, got " + to_string(d));
}

std::string error_kind(const Error& e) {
    if (dynamic_cast<const NonIntegralExponent*>(&e)) return "NonIntegralExponent";
    if (dynamic_cast<const ExponentBudgetExceeded*>(&e)) return "ExponentBudgetExceeded";
    if (dynamic_cast<const InsufficientDepth*>(&e)) return "InsufficientDepth";
    if (dynamic_cast<const PrecisionUnattainable*>(&e)) return "PrecisionUnattainable";
    if (dynamic_cast<const RestrictedIndex*>(&e)) return "RestrictedIndex";
    if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
    if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
    return "Error";
}

}  // namespace

std::string_view to_string(Operation op) {
    switch (op) {
        case Operation::sum: return "sum";
        case Operation::difference: return "difference";
        case Operation::product: return "product";
        case Operation::quotient: return "quotient";
    }
    return "unknown";
}

Operation parse_operation(std::string_view text) {
    for (Operation op : {Operation::sum, Operation::difference, Operation::product,
                         Operation::quotient}) {
        if (text == to_string(op)) return op;
    }
    throw InvalidArgument("unknown operation '" + std::string(text) +
                          "' (expected sum, difference, product or quotient)");
}

std::string_view to_string(RothOutcome outcome) {
    switch (outcome) {
        case RothOutcome::pass: return "pass";
        case RothOutcome::fail: return "fail";
        case RothOutcome::tie: return "tie";
    }
    return "unknown";
}

std::string_view to_string(Decision decision) {
    switch (decision) {
        case Decision::holds: return "holds";
        case Decision::fails: return "fails";
        case Decision::undecided: return "undecided";
    }
    return "unknown";
}

CompositeNumber::CompositeNumber(Operation op, LacunarySeries first, LacunarySeries second)
    : op_(op), first_(std::move(first)), second_(std::move(second)) {
    if (first_.base() == second_.base()) {
        throw InvalidArgument("composite bases must be distinct, both are " + to_string(first_.base()));
    }
    if (!first_.schedule().same_schedule(second_.schedule())) {
        throw InvalidArgument("composite series must share one schedule");
    }
}

const LacunarySeries& CompositeNumber::smaller() const {
    return first_.base() < second_.base() ? first_ : second_;
}

Rational CompositeNumber::combine(const Rational& x, const Rational& y) const {
    switch (op_) {
        case Operation::sum: return x + y;
        case Operation::difference: return x - y;
        case Operation::product: return x * y;
        case Operation::quotient: return x / y;
    }
    throw InvariantViolation("unknown operation");
}

RationalInterval CompositeNumber::combine(const RationalInterval& x, const RationalInterval& y) const {
    switch (op_) {
        case Operation::sum: return x + y;
        case Operation::difference: return x - y;
        case Operation::product: return multiply_nonnegative(x, y);
        case Operation::quotient: return divide_positive(x, y);
    }
    throw InvariantViolation("unknown operation");
}

RationalInterval CompositeNumber::enclose(std::size_t depth) const {
    return combine(lacunary::enclose(first_, depth), lacunary::enclose(second_, depth));
}

std::string decimal_digits(const CompositeNumber& c, unsigned digits) {
    if (digits == 0) throw InvalidArgument("digits must be positive");
    for (std::size_t depth = 1; c.schedule().materializable(depth); ++depth) {
        const RationalInterval box = c.enclose(depth);
        std::string lo = truncated_decimal(box.lo, digits);
        if (lo == truncated_decimal(box.hi, digits)) return lo;
    }
    throw PrecisionUnattainable("cannot resolve " + std::to_string(digits) +
                                " digits within the materialization budget");
}

CompositeConvergent composite_convergent(const CompositeNumber& c, std::size_t n) {
    const Convergent x = partial_sum(c.first(), n);
    const Convergent y = partial_sum(c.second(), n);
    const Rational value = c.combine(x.value(), y.value());
    CompositeConvergent out;
    out.reduced = {n, value.get_num(), value.get_den()};
    out.paired_denominator = c.op() == Operation::quotient ? Integer(x.q * y.p) : Integer(x.q * y.q);
    return out;
}

std::size_t default_depth(const CompositeNumber& c, std::size_t n) {
    const std::size_t last = c.schedule().last_materializable(n + 2);
    if (last <= n) {
        throw InsufficientDepth("no materializable enclosure depth beyond n = " + std::to_string(n));
    }
    return std::min(n + 2, last);
}

Rational gap_bound(const CompositeNumber& c, std::size_t n) {
    if (c.op() == Operation::quotient && n < 2) {
        throw RestrictedIndex("the quotient gap bound is established for n >= 2 only");
    }
    const Rational scale(Integer(1), c.smaller().power(n + 1));
    switch (c.op()) {
        case Operation::sum:
        case Operation::difference:
            return 4 * scale;
        case Operation::product: {
            const std::size_t depth = default_depth(c, n);
            const Rational upper = 1 + enclose(c.first(), depth).hi + enclose(c.second(), depth).hi;
            return 2 * upper * scale;
        }
        case Operation::quotient: {
            const LacunarySeries& denominator = c.second();
            const Integer first_power = ipow(denominator.base(), c.schedule().first().get_ui());
            // 1/theta_{n,2} < g2^{a_1} is what turns the second tail into the constant.
            if (partial_sum(denominator, n).value() <= Rational(Integer(1), first_power)) {
                throw InvariantViolation("theta_{n,2} > g2^{-a_1} failed at n = " + std::to_string(n));
            }
            const std::size_t depth = default_depth(c, n);
            const Rational inverse_theta = 1 / enclose(denominator, depth).lo;
            return (2 + 4 * Rational(first_power)) * inverse_theta * scale;
        }
    }
    throw InvariantViolation("unknown operation");
}

RationalInterval true_gap_enclosure(const CompositeNumber& c, std::size_t n, std::size_t depth) {
    if (depth <= n) {
        throw InsufficientDepth("enclosure depth " + std::to_string(depth) + " must exceed n = " +
                                std::to_string(n));
    }
    const Rational approximant =
        c.combine(partial_sum(c.first(), n).value(), partial_sum(c.second(), n).value());
    return abs(c.enclose(depth) - approximant);
}

ThresholdScan find_n0(const CompositeNumber& c, const Rational& d, std::size_t n_max) {
    check_d(d, "d");
    const Integer combined = c.first().base() * c.second().base();
    ThresholdScan scan;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const Integer current = c.schedule().exponent(n);
        const Integer next = c.schedule().exponent(n + 1);
        ThresholdCheck check{n, PurePower(c.smaller_base(), next * d.get_den()),
                             PurePower(combined, current * d.get_num()),
                             std::strong_ordering::equal};
        check.order = compare(check.lhs, check.rhs);
        if (check.pass() && !scan.n0) scan.n0 = n;
        scan.checks.push_back(std::move(check));
    }
    if (scan.n0) {
        scan.persistent = std::all_of(scan.checks.begin() + static_cast<std::ptrdiff_t>(*scan.n0 - 1),
                                      scan.checks.end(), [](const ThresholdCheck& t) { return t.pass(); });
    }
    return scan;
}

RothInstance verify_roth_instance(const CompositeNumber& c, std::size_t n, const Rational& d_eff) {
    check_d(d_eff, "d_eff");
    RothInstance out;
    out.n = n;
    out.d_eff = d_eff;
    out.q = composite_convergent(c, n).reduced.q;
    const std::size_t last = c.schedule().last_materializable(n + 8);
    for (std::size_t depth = default_depth(c, n); depth <= last; ++depth) {
        out.depth = depth;
        out.gap = true_gap_enclosure(c, n, depth);
        if (const auto outcome = classify_roth(out.gap, out.q, d_eff)) {
            out.outcome = *outcome;
            out.margin = render_margin(out.gap.hi, out.q, d_eff);
            return out;
        }
    }
    throw InsufficientDepth("gap enclosure at n = " + std::to_string(n) +
                            " straddles q^-d_eff at every materializable depth");
}

std::optional<RothOutcome> classify_roth(const RationalInterval& gap, const Integer& q,
                                         const Rational& d_eff) {
    const auto hi = against_inverse_power(gap.hi, q, d_eff);
    if (hi < 0) return RothOutcome::pass;
    if (hi == 0) return RothOutcome::tie;
    if (against_inverse_power(gap.lo, q, d_eff) >= 0) return RothOutcome::fail;
    return std::nullopt;
}

RationalInterval empirical_exponent(const CompositeNumber& c, std::size_t n, std::size_t depth) {
    const RationalInterval gap = true_gap_enclosure(c, n, depth);
    if (gap.lo <= 0) {
        throw InsufficientDepth("gap enclosure at n = " + std::to_string(n) + " contains zero");
    }
    const Integer q = composite_convergent(c, n).reduced.q;
    if (q < 2) throw InvariantViolation("convergent denominator is 1; ln(q) vanishes");

    // Carry enough bits to resolve the relative width of the gap enclosure.
    long precision = kMaxLogPrecision;
    if (gap.hi != gap.lo) {
        const Rational relative = (gap.hi - gap.lo) / gap.lo;
        const long bits = static_cast<long>(bit_length(relative.get_den())) -
                          static_cast<long>(bit_length(relative.get_num()));
        precision = std::clamp(64 + bits, kMinLogPrecision, kMaxLogPrecision);
    }
    precision += 64;

    const RationalInterval ln_lo = log_enclosure(gap.lo, precision);
    const RationalInterval ln_hi = log_enclosure(gap.hi, precision);
    const RationalInterval ln_q = log_enclosure(Rational(q), precision);
    // -ln(gap) ranges over [-ln(gap.hi), -ln(gap.lo)].
    const Rational top_lo = -ln_hi.hi;
    const Rational top_hi = -ln_lo.lo;
    const Rational lo = top_lo / (top_lo >= 0 ? ln_q.hi : ln_q.lo);
    const Rational hi = top_hi / (top_hi >= 0 ? ln_q.lo : ln_q.hi);
    return {lo, hi};
}

namespace {

WitnessRecord make_record(const CompositeNumber& c, std::size_t n, const Rational& d,
                          const Rational& d_eff) {
    WitnessRecord record;
    record.n = n;
    try {
        record.convergent = composite_convergent(c, n);
        if (c.op() == Operation::quotient && n < 2) {
            record.notice = "quotient checks start at n = 2; index 1 is outside the established range";
            return record;
        }
        record.gap_bound = gap_bound(c, n);
        const std::size_t depth = default_depth(c, n);
        record.depth = depth;
        record.gap = true_gap_enclosure(c, n, depth);
        record.bound_dominates = record.gap->hi <= *record.gap_bound;

        const Integer& q = record.convergent->reduced.q;
        RothInstance roth;
        roth.n = n;
        roth.d_eff = d_eff;
        roth.depth = depth;
        roth.gap = *record.gap;
        roth.q = q;
        if (const auto outcome = classify_roth(roth.gap, q, d_eff)) {
            roth.outcome = *outcome;
            roth.margin = render_margin(roth.gap.hi, q, d_eff);
            record.roth = std::move(roth);
        } else {
            record.roth = verify_roth_instance(c, n, d_eff);
        }
        record.exponent = empirical_exponent(c, n, record.roth->depth);

        if (c.op() == Operation::quotient) {
            const Convergent x = partial_sum(c.first(), n);
            const Convergent y = partial_sum(c.second(), n);
            const RationalInterval four = RationalInterval::point(Rational(4));
            record.quotient_paired_q = decide_scaled(*record.gap, four, Integer(x.q * y.q), d);
            const RationalInterval theta2 = enclose(c.second(), depth);
            const RationalInterval mixed{4 * (1 + theta2.lo), 4 * (1 + theta2.hi)};
            record.quotient_paired_p = decide_scaled(*record.gap, mixed, Integer(x.q * y.p), d);
        }
    } catch (const Error& e) {
        record.error = e.what();
        record.error_kind = error_kind(e);
    }
    return record;
}

}  // namespace

WitnessCertificate certify(const CompositeNumber& c, const Rational& d, std::size_t n_from,
                           std::size_t n_to) {
    check_d(d, "d");
    if (n_from == 0) throw InvalidArgument("index range starts at 1");
    WitnessCertificate cert;
    cert.op = c.op();
    cert.g1 = c.first().base();
    cert.g2 = c.second().base();
    cert.a1 = c.schedule().first();
    cert.beta = c.schedule().beta();
    cert.budget = c.schedule().budget();
    cert.d = d;
    cert.d_eff = (2 + d) / 2;
    cert.n_from = n_from;
    cert.n_to = n_to;
    if (n_from > n_to) return cert;

    try {
        cert.threshold = find_n0(c, d, n_to);
    } catch (const Error& e) {
        cert.threshold_error = e.what();
    }

    std::vector<std::future<WitnessRecord>> pending;
    for (std::size_t n = n_from; n <= n_to; ++n) {
        pending.push_back(std::async(std::launch::async, make_record, std::cref(c), n,
                                     std::cref(d), std::cref(cert.d_eff)));
    }
    for (auto& f : pending) cert.records.push_back(f.get());

    const std::optional<std::size_t> n0 = cert.threshold ? cert.threshold->n0 : std::nullopt;
    for (const WitnessRecord& r : cert.records) {
        if (r.bound_dominates && !*r.bound_dominates) cert.sound = false;
        if (n0 && r.n >= *n0 && r.roth && r.roth->outcome == RothOutcome::pass) {
            cert.witnesses.push_back(r.n);
        }
    }
    return cert;
}

}  // namespace lacunary
