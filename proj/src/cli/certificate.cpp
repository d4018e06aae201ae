#include <string>

#include "lacunary/cli.hpp"

namespace lacunary::cli {

using nlohmann::ordered_json;

namespace {

ordered_json integer_json(const Integer& x) { return to_string(x); }

ordered_json index_json(std::size_t n) { return std::to_string(n); }

ordered_json interval_json(const RationalInterval& x) {
    ordered_json j;
    j["lo"] = rational_json(x.lo);
    j["hi"] = rational_json(x.hi);
    return j;
}

ordered_json power_json(const PurePower& p) {
    ordered_json j;
    j["base"] = integer_json(p.base);
    j["exp"] = integer_json(p.exp);
    return j;
}

ordered_json threshold_json(const ThresholdScan& scan) {
    ordered_json j;
    j["n0"] = scan.n0 ? index_json(*scan.n0) : ordered_json(nullptr);
    j["persistent"] = scan.persistent;
    ordered_json checks = ordered_json::array();
    for (const ThresholdCheck& check : scan.checks) {
        ordered_json item;
        item["n"] = index_json(check.n);
        item["lhs"] = power_json(check.lhs);
        item["rhs"] = power_json(check.rhs);
        item["order"] = std::string(to_string(check.order));
        item["pass"] = check.pass();
        checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    return j;
}

ordered_json record_json(const WitnessRecord& r) {
    ordered_json j;
    j["n"] = index_json(r.n);
    if (r.notice) j["notice"] = *r.notice;
    if (r.error) {
        j["error"] = *r.error;
        j["error_kind"] = r.error_kind.value_or("error");
    }
    if (r.convergent) {
        ordered_json conv;
        conv["p"] = integer_json(r.convergent->reduced.p);
        conv["q"] = integer_json(r.convergent->reduced.q);
        conv["paired_denominator"] = integer_json(r.convergent->paired_denominator);
        j["convergent"] = std::move(conv);
    }
    if (r.gap_bound) j["gap_bound"] = rational_json(*r.gap_bound);
    if (r.depth) j["depth"] = index_json(*r.depth);
    if (r.gap) j["gap"] = interval_json(*r.gap);
    if (r.bound_dominates) j["bound_dominates"] = *r.bound_dominates;
    if (r.roth) {
        ordered_json roth;
        roth["d_eff"] = rational_json(r.roth->d_eff);
        roth["depth"] = index_json(r.roth->depth);
        roth["outcome"] = std::string(to_string(r.roth->outcome));
        roth["margin"] = r.roth->margin;
        j["roth"] = std::move(roth);
    }
    if (r.exponent) j["exponent"] = interval_json(*r.exponent);
    if (r.quotient_paired_q || r.quotient_paired_p) {
        ordered_json q;
        if (r.quotient_paired_q) q["paired_q"] = std::string(to_string(*r.quotient_paired_q));
        if (r.quotient_paired_p) q["paired_p"] = std::string(to_string(*r.quotient_paired_p));
        j["quotient_forms"] = std::move(q);
    }
    return j;
}

}  // namespace

ordered_json rational_json(const Rational& x) {
    ordered_json j;
    j["num"] = to_string(Integer(x.get_num()));
    j["den"] = to_string(Integer(x.get_den()));
    return j;
}

Rational rational_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() ||
        !j["den"].is_string()) {
        throw InvalidArgument("expected {\"num\": string, \"den\": string}");
    }
    const Integer num = parse_integer(j["num"].get<std::string>());
    const Integer den = parse_integer(j["den"].get<std::string>());
    if (den <= 0) throw InvalidArgument("denominator must be positive");
    Rational x(num, den);
    x.canonicalize();
    if (x.get_num() != num || x.get_den() != den) throw InvalidArgument("rational not in lowest terms");
    return x;
}

ordered_json certificate_json(const WitnessCertificate& cert) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool"] = kToolVersion;

    ordered_json config;
    config["op"] = std::string(to_string(cert.op));
    config["g1"] = integer_json(cert.g1);
    config["g2"] = integer_json(cert.g2);
    config["a1"] = integer_json(cert.a1);
    config["beta"] = rational_json(cert.beta);
    config["d"] = rational_json(cert.d);
    config["d_eff"] = rational_json(cert.d_eff);
    config["n_from"] = index_json(cert.n_from);
    config["n_to"] = index_json(cert.n_to);
    ordered_json budget;
    budget["exponent_bits"] = std::to_string(cert.budget.exponent_bits);
    budget["materialize_bits"] = std::to_string(cert.budget.materialize_bits);
    config["budget"] = std::move(budget);
    doc["config"] = std::move(config);

    if (cert.threshold) {
        doc["threshold"] = threshold_json(*cert.threshold);
    } else {
        ordered_json t;
        t["error"] = cert.threshold_error.value_or("not evaluated");
        doc["threshold"] = std::move(t);
    }

    ordered_json records = ordered_json::array();
    for (const WitnessRecord& r : cert.records) records.push_back(record_json(r));
    doc["records"] = std::move(records);

    ordered_json verdict;
    ordered_json witnesses = ordered_json::array();
    for (std::size_t n : cert.witnesses) witnesses.push_back(index_json(n));
    verdict["witnesses"] = std::move(witnesses);
    verdict["sound"] = cert.sound;
    doc["verdict"] = std::move(verdict);
    return doc;
}

std::string canonical_dump(const ordered_json& doc) { return doc.dump(-1, ' ', false) + "\n"; }

}  // namespace lacunary::cli
