#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lacunary/cli.hpp"

namespace lacunary::cli {

namespace {

std::string_view symbol(Operation op) {
    switch (op) {
        case Operation::sum: return "+";
        case Operation::difference: return "-";
        case Operation::product: return "*";
        case Operation::quotient: return "/";
    }
    return "?";
}

std::string fraction(const Rational& x) { return to_string(x); }

unsigned measure_degree(const RunConfig& config) {
    if (config.d.get_den() != 1 || config.d < 2 || config.d > 1000) {
        throw ConfigError("d", "measure needs an integer degree in 2..1000");
    }
    return static_cast<unsigned>(config.d.get_num().get_ui());
}

std::string comparison_word(std::strong_ordering order) {
    if (order < 0) return "<";
    if (order > 0) return ">";
    return "=";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config", "cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

}  // namespace

int cmd_digits(const RunConfig& config, std::ostream& out) {
    const CompositeNumber c = config.composite();
    const std::string first = decimal_digits(c.first(), config.digits);
    const std::string second = decimal_digits(c.second(), config.digits);
    const std::string combined = decimal_digits(c, config.digits);
    out << "theta1 " << first << "\ntheta2 " << second << '\n'
        << to_string(config.op) << ' ' << combined << '\n';
    return kSuccess;
}

int cmd_convergents(const RunConfig& config, std::ostream& out) {
    const CompositeNumber c = config.composite();
    for (std::size_t n = config.n_from; n <= config.n_to; ++n) {
        const Convergent p1 = partial_sum(c.first(), n);
        const Convergent p2 = partial_sum(c.second(), n);
        const CompositeConvergent pc = composite_convergent(c, n);
        out << "n=" << n << " a_n=" << to_string(c.schedule().exponent(n)) << '\n'
            << "  theta1 " << to_string(p1.p) << '/' << to_string(p1.q) << '\n'
            << "  theta2 " << to_string(p2.p) << '/' << to_string(p2.q) << '\n'
            << "  " << to_string(config.op) << ' ' << to_string(pc.reduced.p) << '/'
            << to_string(pc.reduced.q) << '\n'
            << "  paired denominator " << to_string(pc.paired_denominator) << '\n';
    }
    return kSuccess;
}

int cmd_witness(const RunConfig& config, std::ostream& out) {
    const CompositeNumber c = config.composite();
    const WitnessCertificate cert = certify(c, config.d, config.n_from, config.n_to);
    const std::string text = canonical_dump(certificate_json(cert));
    if (config.output_path.empty()) {
        out << text;
        return kSuccess;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw ConfigError("out", "cannot write " + config.output_path);
    file << text;
    if (!file.flush()) throw ConfigError("out", "write failed for " + config.output_path);
    return kSuccess;
}

int cmd_measure(const RunConfig& config, std::ostream& out) {
    const CompositeNumber c = config.composite();
    const unsigned d = measure_degree(config);

    std::optional<RationalInterval> value;
    Integer height = config.height;
    if (!config.target_poly.empty()) {
        if (!config.target_bracket) throw ConfigError("target_bracket", "required with target_poly");
        height = naive_height(config.target_poly);
        value = root_enclosure(config.target_poly, *config.target_bracket, Rational(1, 1000000));
    }
    const AlgebraicTarget target(d, height, value);
    MeasureBound m = approximation_measure(target);
    const BracketResult bracket = find_n1(c, target, config.n_to);
    m.n1 = bracket.n1;

    out << "degree " << d << " height " << to_string(height) << '\n';
    for (const std::string& line : m.trace) out << line << '\n';
    const Integer per_height = 2 * Integer(d) * Integer(d);
    out << "|theta1" << symbol(config.op) << "theta2-xi| > 1/(" << to_string(per_height) << "H)^"
        << (1 + 4 * d) << '\n';

    for (const BracketEvidence& e : bracket.evidence) {
        out << "n=" << e.n << ": (g1g2)^{a_" << e.n << "/2} " << comparison_word(e.left) << ' '
            << to_string(bracket.scale);
        if (e.right) {
            out << ", (g1g2)^{a_" << e.n + 1 << "/2} " << comparison_word(*e.right) << ' '
                << to_string(bracket.scale);
        }
        out << '\n';
    }
    switch (bracket.status) {
        case BracketStatus::found: {
            out << "n1 = " << *bracket.n1 << '\n';
            const SufficiencyCheck s = check_sufficiency(c, target, *bracket.n1);
            out << "gap condition " << (s.gap_condition ? "holds" : "fails") << ", growth condition "
                << (s.growth_condition ? "holds" : "fails") << '\n';
            break;
        }
        case BracketStatus::tie:
            out << "warning: tie at n=" << *bracket.tie_index << ": (g1g2)^{a_" << *bracket.tie_index
                << "/2} = " << to_string(bracket.scale) << '\n';
            break;
        case BracketStatus::not_found:
            out << "n1 not found for n <= " << config.n_to << '\n';
            break;
    }

    if (value) {
        const std::size_t depth = std::max<std::size_t>(config.n_to, 1);
        const TargetCheck check = check_against_target(c, target, depth);
        out << "target xi in [" << fraction(value->lo) << ", " << fraction(value->hi) << "]\n";
        out << "target check: " << to_string(check.status);
        if (check.distance) out << " distance >= " << scientific(*check.distance, 6);
        out << '\n';
    }
    return kSuccess;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
    const GrowthWindow window(config.alpha, config.k);
    const GrowthReport report = validate_growth(config.schedule(), window, config.n_to);
    out << "window alpha=" << fraction(config.alpha) << " k=" << fraction(config.k) << '\n';
    for (const GrowthCheck& g : report.checks) {
        out << "n=" << g.n << " lower " << (g.lower_holds() ? "pass" : "FAIL") << " ("
            << to_string(g.lower) << ") upper " << (g.upper_holds() ? "pass" : "FAIL") << " ("
            << to_string(g.upper) << ")\n";
    }
    out << (report.all_pass() ? "all pass" : "failing:");
    for (std::size_t n : report.failing) out << ' ' << n;
    out << '\n';
    return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification toolkit for lacunary series", "lacunary-cli"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    struct Flag {
        const char* name;
        const char* key;
        const char* help;
    };
    static constexpr std::array flags = {
        Flag{"--g1", "g1", "first base"},
        Flag{"--g2", "g2", "second base"},
        Flag{"--a1", "a1", "first exponent"},
        Flag{"--beta", "beta", "growth exponent u/v"},
        Flag{"--op", "op", "sum, difference, product or quotient"},
        Flag{"--d", "d", "Roth exponent target, or degree for measure"},
        Flag{"--n-from", "n_from", "first index"},
        Flag{"--n-to", "n_to", "last index"},
        Flag{"--digits", "digits", "decimal places"},
        Flag{"--alpha", "alpha", "growth window alpha"},
        Flag{"--k", "k", "growth window k"},
        Flag{"--height", "height", "target height H"},
        Flag{"--budget-bits", "budget_bits", "materialize g^{a_n} while a_n <= 2^bits"},
        Flag{"--out", "out", "certificate output path"},
        Flag{"--target-poly", "target_poly", "target polynomial, constant term first"},
        Flag{"--target-bracket", "target_bracket", "lo,hi bracketing the target root"},
    };
    std::string config_path;
    std::map<std::string, std::string> values;
    app.add_option("--config", config_path, "JSON configuration file");
    for (const Flag& f : flags) app.add_option(f.name, values[f.key], f.help);

    using Command = int (*)(const RunConfig&, std::ostream&);
    const std::array<std::pair<const char*, Command>, 5> commands = {{
        {"digits", cmd_digits},
        {"convergents", cmd_convergents},
        {"witness", cmd_witness},
        {"measure", cmd_measure},
        {"validate", cmd_validate},
    }};
    for (const auto& [name, fn] : commands) app.add_subcommand(name)->fallthrough();

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigError;
    }

    try {
        RawSettings raw;
        if (!config_path.empty()) raw = read_config_json(read_file(config_path));
        for (const Flag& f : flags) {
            if (app.count(f.name) > 0) raw[f.key] = values[f.key];
        }
        const RunConfig config = parse_config(raw);
        for (const auto& [name, fn] : commands) {
            if (app.got_subcommand(name)) return fn(config, out);
        }
        return kConfigError;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const InvalidArgument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const NonIntegralExponent& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ExponentBudgetExceeded& e) {
        err << "budget error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const PrecisionUnattainable& e) {
        err << "budget error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const InsufficientDepth& e) {
        err << "budget error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace lacunary::cli
