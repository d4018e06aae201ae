#include "lacunary/schedule.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <variant>

#include "lacunary/errors.hpp"
#include "lacunary/powercmp.hpp"

namespace lacunary {

struct PowerSchedule::State {
    Integer first;
    Rational beta;
    Budget budget;
    // beta = u/v in lowest terms: a_{n+1} = (a_n^{1/v})^{u+v}
    unsigned long root_degree = 1;
    unsigned long power = 2;
    Integer exponent_limit;

    mutable std::mutex mutex;
    mutable std::vector<Integer> cache;
    // Set once the sequence can no longer be extended; replayed on every later request.
    mutable std::optional<std::variant<NonIntegralExponent, ExponentBudgetExceeded>> stop;
};

namespace {

[[noreturn]] void rethrow(const std::variant<NonIntegralExponent, ExponentBudgetExceeded>& stop) {
    std::visit([](const auto& e) { throw e; }, stop);
    throw InvariantViolation("unreachable");
}

}  // namespace

PowerSchedule::PowerSchedule(Integer first, Rational beta, Budget budget)
    : state_(std::make_shared<State>()) {
    if (first < 2) throw InvalidArgument("a_1 must be >= 2, got " + to_string(first));
    if (beta <= 0) throw InvalidArgument("beta must be positive, got " + to_string(beta));
    if (budget.materialize_bits > budget.exponent_bits) {
        throw InvalidArgument("materialize_bits must not exceed exponent_bits");
    }
    state_->first = std::move(first);
    state_->beta = std::move(beta);
    state_->budget = budget;
    state_->root_degree = to_ulong(state_->beta.get_den(), "beta denominator");
    state_->power = to_ulong(state_->beta.get_num() + state_->beta.get_den(), "beta numerator");
    state_->exponent_limit = Integer(1) << budget.exponent_bits;
    if (state_->first > state_->exponent_limit) {
        throw ExponentBudgetExceeded(1, "a_1 exceeds 2^" + std::to_string(budget.exponent_bits));
    }
    state_->cache.push_back(state_->first);
}

const Integer& PowerSchedule::first() const { return state_->first; }
const Rational& PowerSchedule::beta() const { return state_->beta; }
const Budget& PowerSchedule::budget() const { return state_->budget; }

Integer PowerSchedule::exponent(std::size_t n) const {
    if (n == 0) throw InvalidArgument("exponent index starts at 1");
    State& s = *state_;
    std::lock_guard lock(s.mutex);
    while (s.cache.size() < n) {
        if (s.stop) rethrow(*s.stop);
        const std::size_t next = s.cache.size() + 1;
        const Integer& current = s.cache.back();

        Integer root;
        const bool exact = mpz_root(root.get_mpz_t(), current.get_mpz_t(), s.root_degree) != 0;
        if (!exact) {
            s.stop = NonIntegralExponent(
                next, "a_" + std::to_string(next) + " = a_" + std::to_string(next - 1) + "^(1+" +
                          to_string(s.beta) + ") is not an integer: a_" +
                          std::to_string(next - 1) + " = " + to_string(current) +
                          " has no exact integer root of degree " + std::to_string(s.root_degree));
            continue;
        }
        // root^power has at least (bits(root)-1)*power+1 bits.
        const Integer min_bits = Integer(static_cast<unsigned long>(bit_length(root) - 1)) * s.power + 1;
        if (min_bits > s.budget.exponent_bits + 1) {
            s.stop = ExponentBudgetExceeded(
                next, "a_" + std::to_string(next) + " exceeds 2^" + std::to_string(s.budget.exponent_bits));
            continue;
        }
        Integer value = ipow(root, s.power);
        if (value > s.exponent_limit) {
            s.stop = ExponentBudgetExceeded(
                next, "a_" + std::to_string(next) + " exceeds 2^" + std::to_string(s.budget.exponent_bits));
            continue;
        }
        s.cache.push_back(std::move(value));
    }
    return s.cache[n - 1];
}

std::vector<Integer> PowerSchedule::exponents(std::size_t n) const {
    std::vector<Integer> out;
    if (n == 0) return out;
    exponent(n);
    std::lock_guard lock(state_->mutex);
    out.assign(state_->cache.begin(), state_->cache.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

Integer PowerSchedule::materialize_ceiling() const {
    return Integer(1) << state_->budget.materialize_bits;
}

bool PowerSchedule::materializable(std::size_t n) const {
    try {
        return exponent(n) <= materialize_ceiling();
    } catch (const ExponentBudgetExceeded&) {
        return false;
    }
}

std::size_t PowerSchedule::last_materializable(std::size_t limit) const {
    std::size_t n = 0;
    while (n < limit && materializable(n + 1)) ++n;
    return n;
}

std::size_t PowerSchedule::cached_terms() const {
    std::lock_guard lock(state_->mutex);
    return state_->cache.size();
}

GrowthWindow::GrowthWindow(Rational alpha_, Rational k_) : alpha(std::move(alpha_)), k(std::move(k_)) {
    if (alpha <= 1) throw InvalidArgument("alpha must be > 1, got " + to_string(alpha));
    if (k <= 1) throw InvalidArgument("k must be > 1, got " + to_string(k));
}

GrowthReport validate_growth(const PowerSchedule& schedule, const GrowthWindow& window,
                             std::size_t n_max) {
    GrowthReport report;
    const Rational upper_power = window.k * window.alpha;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const Integer current = schedule.exponent(n);
        const Integer next = schedule.exponent(n + 1);
        GrowthCheck check;
        check.n = n;
        // a_n^{p/q} vs a_{n+1}  <=>  a_n^p vs a_{n+1}^q
        check.lower = compare(PurePower(current, window.alpha.get_num()),
                              PurePower(next, window.alpha.get_den()));
        check.upper = compare(PurePower(next, upper_power.get_den()),
                              PurePower(current, upper_power.get_num()));
        if (!check.holds()) report.failing.push_back(n);
        report.checks.push_back(check);
    }
    return report;
}

}  // namespace lacunary
