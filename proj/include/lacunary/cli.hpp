#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lacunary/errors.hpp"
#include "lacunary/measure.hpp"
#include "lacunary/witness.hpp"

namespace lacunary::cli {

inline constexpr const char* kToolVersion = "lacunary-cli 0.1.0";
inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 2,
    kBudgetError = 3,
    kInternalError = 4,
};

/// A configuration value that does not parse; names the offending field.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Fully parsed run configuration. Defaults are the standard example
/// (g1 = 2, g2 = 3, a1 = 2, a_{n+1} = a_n^2).
struct RunConfig {
    Integer g1 = 2;
    Integer g2 = 3;
    Integer a1 = 2;
    Rational beta = 1;
    Operation op = Operation::sum;
    /// Exponent target for `witness`; the degree for `measure`.
    Rational d = 3;
    std::size_t n_from = 1;
    std::size_t n_to = 4;
    /// g^{a_n} is materialized only while a_n <= 2^budget_bits.
    unsigned budget_bits = 20;
    std::string output_path;

    unsigned digits = 10;
    Rational alpha = 4;
    Rational k = 2;
    Integer height = 1;
    std::vector<Integer> target_poly;
    std::optional<RationalInterval> target_bracket;

    Budget budget() const;
    PowerSchedule schedule() const;
    CompositeNumber composite() const;
};

/// Raw textual settings keyed by field name (g1, g2, a1, beta, op, d, n_from, n_to,
/// digits, alpha, k, height, budget_bits, out, target_poly, target_bracket).
using RawSettings = std::map<std::string, std::string>;

/// Reads a JSON config object into raw settings. Numbers and strings are both accepted;
/// n_range may be given as a two-element array.
RawSettings read_config_json(const std::string& text);

/// Parses raw settings over the defaults. Throws ConfigError naming the field.
RunConfig parse_config(const RawSettings& raw);

nlohmann::ordered_json rational_json(const Rational& x);
Rational rational_from_json(const nlohmann::ordered_json& j);

/// Canonical certificate document: fixed key order, integers as decimal strings,
/// rationals as {"num", "den"}, no insignificant whitespace.
nlohmann::ordered_json certificate_json(const WitnessCertificate& cert);
std::string canonical_dump(const nlohmann::ordered_json& doc);

int cmd_digits(const RunConfig& config, std::ostream& out);
int cmd_convergents(const RunConfig& config, std::ostream& out);
int cmd_witness(const RunConfig& config, std::ostream& out);
int cmd_measure(const RunConfig& config, std::ostream& out);
int cmd_validate(const RunConfig& config, std::ostream& out);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lacunary::cli
