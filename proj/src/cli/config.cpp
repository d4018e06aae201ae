#include <algorithm>
#include <string>

#include "lacunary/cli.hpp"

namespace lacunary::cli {

namespace {

const std::vector<std::string>& known_fields() {
    static const std::vector<std::string> fields = {
        "g1", "g2", "a1", "beta", "op", "d", "n_from", "n_to", "digits", "alpha", "k",
        "height", "budget_bits", "out", "target_poly", "target_bracket"};
    return fields;
}

std::string scalar_text(const nlohmann::json& value, const std::string& field) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return value.dump();
    throw ConfigError(field, "expected a string or an integer");
}

std::string join_list(const nlohmann::json& value, const std::string& field) {
    if (!value.is_array()) return scalar_text(value, field);
    std::string out;
    for (const auto& item : value) {
        if (!out.empty()) out += ',';
        out += scalar_text(item, field);
    }
    return out;
}

template <typename Parse>
auto parse_field(const RawSettings& raw, const std::string& field, Parse parse)
    -> std::optional<decltype(parse(std::string()))> {
    const auto it = raw.find(field);
    if (it == raw.end()) return std::nullopt;
    try {
        return parse(it->second);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(field, e.what());
    }
}

std::size_t parse_index(const std::string& text) {
    const Integer value = parse_integer(text);
    if (value < 0) throw InvalidArgument("must be non-negative");
    return static_cast<std::size_t>(to_ulong(value, "index"));
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
        parts.push_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

}  // namespace

Budget RunConfig::budget() const {
    Budget b;
    b.materialize_bits = budget_bits;
    b.exponent_bits = std::max(b.exponent_bits, budget_bits);
    return b;
}

PowerSchedule RunConfig::schedule() const { return PowerSchedule(a1, beta, budget()); }

CompositeNumber RunConfig::composite() const {
    const PowerSchedule shared = schedule();
    return CompositeNumber(op, LacunarySeries(g1, shared), LacunarySeries(g2, shared));
}

RawSettings read_config_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");

    RawSettings raw;
    for (const auto& [key, value] : doc.items()) {
        if (key == "n_range") {
            if (!value.is_array() || value.size() != 2) {
                throw ConfigError("n_range", "expected [lo, hi]");
            }
            raw["n_from"] = scalar_text(value[0], "n_range");
            raw["n_to"] = scalar_text(value[1], "n_range");
            continue;
        }
        if (std::find(known_fields().begin(), known_fields().end(), key) == known_fields().end()) {
            throw ConfigError(key, "unknown configuration field");
        }
        raw[key] = (key == "target_poly" || key == "target_bracket") ? join_list(value, key)
                                                                      : scalar_text(value, key);
    }
    return raw;
}

RunConfig parse_config(const RawSettings& raw) {
    RunConfig c;
    if (auto v = parse_field(raw, "g1", parse_integer)) c.g1 = *v;
    if (auto v = parse_field(raw, "g2", parse_integer)) c.g2 = *v;
    if (auto v = parse_field(raw, "a1", parse_integer)) c.a1 = *v;
    if (auto v = parse_field(raw, "beta", parse_rational)) c.beta = *v;
    if (auto v = parse_field(raw, "op", [](const std::string& s) { return parse_operation(s); })) c.op = *v;
    if (auto v = parse_field(raw, "d", parse_rational)) c.d = *v;
    if (auto v = parse_field(raw, "n_from", parse_index)) c.n_from = *v;
    if (auto v = parse_field(raw, "n_to", parse_index)) c.n_to = *v;
    if (auto v = parse_field(raw, "digits", parse_index)) c.digits = static_cast<unsigned>(*v);
    if (auto v = parse_field(raw, "alpha", parse_rational)) c.alpha = *v;
    if (auto v = parse_field(raw, "k", parse_rational)) c.k = *v;
    if (auto v = parse_field(raw, "height", parse_integer)) c.height = *v;
    if (auto v = parse_field(raw, "budget_bits", parse_index)) c.budget_bits = static_cast<unsigned>(*v);
    if (auto it = raw.find("out"); it != raw.end()) c.output_path = it->second;
    if (auto v = parse_field(raw, "target_poly", [](const std::string& s) {
            std::vector<Integer> coeffs;
            for (const std::string& part : split(s)) coeffs.push_back(parse_integer(part));
            return coeffs;
        })) {
        c.target_poly = *v;
    }
    if (auto v = parse_field(raw, "target_bracket", [](const std::string& s) {
            const auto parts = split(s);
            if (parts.size() != 2) throw InvalidArgument("expected lo,hi");
            return RationalInterval(parse_rational(parts[0]), parse_rational(parts[1]));
        })) {
        c.target_bracket = *v;
    }

    if (c.g1 < 2) throw ConfigError("g1", "must be >= 2");
    if (c.g2 < 2) throw ConfigError("g2", "must be >= 2");
    if (c.g1 == c.g2) throw ConfigError("g2", "must differ from g1");
    if (c.a1 < 2) throw ConfigError("a1", "must be >= 2");
    if (c.beta <= 0) throw ConfigError("beta", "must be positive");
    if (c.n_from < 1) throw ConfigError("n_from", "must be >= 1");
    if (c.budget_bits < 1 || c.budget_bits > 40) throw ConfigError("budget_bits", "must lie in 1..40");
    if (c.digits < 1) throw ConfigError("digits", "must be positive");
    if (c.height < 1) throw ConfigError("height", "must be >= 1");
    if (c.target_poly.size() == 1) throw ConfigError("target_poly", "needs degree >= 1");
    if (!c.target_poly.empty() && c.target_poly.back() == 0) {
        throw ConfigError("target_poly", "leading coefficient must be nonzero");
    }
    if (c.target_bracket && c.target_poly.empty()) {
        throw ConfigError("target_bracket", "requires target_poly");
    }
    return c;
}

}  // namespace lacunary::cli
