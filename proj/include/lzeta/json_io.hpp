// JSON input/output: representation specs, per-prime assembly data, and suite
// reports.  The wire formats are documented by the schema files shipped under
// schemas/.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rep.hpp"
#include "series.hpp"
#include "spectral.hpp"
#include "textio.hpp"

namespace lzeta {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// RepSpec
// ---------------------------------------------------------------------------

struct RepSpecData {
    int n = 0;
    unsigned long p = 0;
    bool exact = true;
    std::vector<Scalar> exact_satake;
    std::vector<std::complex<double>> numeric_satake;

    UnramifiedRep<Scalar> to_exact() const {
        if (!exact) throw parse_error("RepSpec: numeric-mode spec used where exact parameters are required");
        return UnramifiedRep<Scalar>(p, exact_satake);
    }
    UnramifiedRep<std::complex<double>> to_numeric() const {
        if (exact) {
            std::vector<std::complex<double>> v;
            v.reserve(exact_satake.size());
            for (const Scalar &s : exact_satake) v.push_back(s.to_complex());
            return UnramifiedRep<std::complex<double>>(p, v);
        }
        return UnramifiedRep<std::complex<double>>(p, numeric_satake);
    }
};

namespace detail {
inline const json &require_field(const json &j, const char *key, const char *what) {
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(std::string(what) + ": missing field '" + key + "'");
    return *it;
}
} // namespace detail

inline RepSpecData parse_repspec(const json &j, const char *what = "RepSpec") {
    if (!j.is_object()) throw parse_error(std::string(what) + ": expected an object");
    RepSpecData out;
    const json &jn = detail::require_field(j, "n", what);
    const json &jp = detail::require_field(j, "p", what);
    if (!jn.is_number_integer() || !jp.is_number_integer())
        throw parse_error(std::string(what) + ": 'n' and 'p' must be integers");
    out.n = jn.get<int>();
    long p_signed = jp.get<long>();
    if (out.n < 1) throw parse_error(std::string(what) + ": rank must be >= 1");
    if (p_signed < 2) throw parse_error(std::string(what) + ": residue cardinality must be >= 2");
    out.p = static_cast<unsigned long>(p_signed);
    std::string mode = j.value("mode", std::string("exact"));
    if (mode != "exact" && mode != "numeric") throw parse_error(std::string(what) + ": mode must be 'exact' or 'numeric'");
    out.exact = mode == "exact";
    const json &sat = detail::require_field(j, "satake", what);
    if (!sat.is_array() || static_cast<int>(sat.size()) != out.n)
        throw parse_error(std::string(what) + ": 'satake' must be an array of length n");
    for (const json &entry : sat) {
        if (out.exact) {
            if (!entry.is_string()) throw parse_error(std::string(what) + ": exact satake entries are scalar strings");
            out.exact_satake.push_back(parse_scalar(entry.get<std::string>(), out.p));
        } else {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
                throw parse_error(std::string(what) + ": numeric satake entries are [re, im] pairs");
            out.numeric_satake.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return out;
}

inline json repspec_to_json(const UnramifiedRep<Scalar> &rep) {
    json sat = json::array();
    for (const Scalar &s : rep.satake()) sat.push_back(to_string(s));
    return json{{"n", rep.rank()}, {"p", rep.residue_cardinality()}, {"mode", "exact"}, {"satake", sat}};
}

// ---------------------------------------------------------------------------
// RamifiedDescriptor / PrimeLocalData
// ---------------------------------------------------------------------------

inline RamifiedDescriptor parse_descriptor(const json &j) {
    if (!j.is_object()) throw parse_error("descriptor: expected an object");
    std::string kind = j.value("kind", std::string("unramified"));
    RamifiedDescriptor::Kind k;
    if (kind == "unramified")
        k = RamifiedDescriptor::Kind::unramified;
    else if (kind == "supercuspidal")
        k = RamifiedDescriptor::Kind::supercuspidal_tau;
    else if (kind == "other")
        k = RamifiedDescriptor::Kind::other;
    else
        throw parse_error("descriptor: kind must be one of 'unramified', 'supercuspidal', 'other'");
    int c = j.value("conductor_exponent", 0);
    std::optional<Scalar> eps;
    if (j.contains("epsilon_at_1")) {
        if (!j["epsilon_at_1"].is_string()) throw parse_error("descriptor: epsilon_at_1 must be a scalar string");
        eps = parse_scalar(j["epsilon_at_1"].get<std::string>());
    }
    try {
        return RamifiedDescriptor(k, c, std::move(eps));
    } catch (const precondition_error &e) {
        throw parse_error(std::string("descriptor: ") + e.what());
    }
}

inline json descriptor_to_json(const RamifiedDescriptor &d) {
    json out{{"conductor_exponent", d.conductor_exponent}};
    switch (d.kind) {
        case RamifiedDescriptor::Kind::unramified: out["kind"] = "unramified"; break;
        case RamifiedDescriptor::Kind::supercuspidal_tau: out["kind"] = "supercuspidal"; break;
        case RamifiedDescriptor::Kind::other: out["kind"] = "other"; break;
    }
    if (d.epsilon_at_1) out["epsilon_at_1"] = to_string(*d.epsilon_at_1);
    return out;
}

inline PrimeLocalData parse_prime_local_data(const json &j) {
    if (!j.is_object()) throw parse_error("PrimeLocalData: expected an object");
    const json &jp = detail::require_field(j, "p", "PrimeLocalData");
    if (!jp.is_number_integer() || jp.get<long>() < 2)
        throw parse_error("PrimeLocalData: 'p' must be an integer >= 2");
    unsigned long p = static_cast<unsigned long>(jp.get<long>());
    RepSpecData Pi = parse_repspec(detail::require_field(j, "Pi", "PrimeLocalData"), "PrimeLocalData.Pi");
    RepSpecData pi = parse_repspec(detail::require_field(j, "pi", "PrimeLocalData"), "PrimeLocalData.pi");
    if (Pi.p != p || pi.p != p) throw parse_error("PrimeLocalData: Pi and pi must share the place's p");
    int f = j.value("f", 0);
    RamifiedDescriptor desc;
    if (j.contains("descriptor")) desc = parse_descriptor(j["descriptor"]);
    try {
        return PrimeLocalData(p, Pi.to_exact(), pi.to_exact(), f, std::move(desc));
    } catch (const precondition_error &e) {
        throw parse_error(std::string("PrimeLocalData: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Series / factor rendering
// ---------------------------------------------------------------------------

inline json series_to_json(const Series2<Scalar> &s) {
    json coeffs = json::array();
    s.for_each([&](int d1, int d2, const Scalar &c) {
        coeffs.push_back(json{{"d1", d1}, {"d2", d2}, {"value", to_string(c)}});
    });
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

inline json factors_to_json(const EulerFactor<Scalar> &f) {
    json terms = json::array();
    for (const auto &t : f.terms())
        terms.push_back(json{{"c", to_string(t.c)}, {"a", t.a}, {"b", t.b}, {"e", t.e}});
    return terms;
}

// ---------------------------------------------------------------------------
// SuiteReport
// ---------------------------------------------------------------------------

struct TrialResult {
    int index = 0;
    bool pass = false;
    std::optional<ExponentPair> first_discrepancy;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    int order = 0;
    uint64_t seed = 0;
    bool pass = false;
    std::vector<TrialResult> results;
    double wall_ms = 0.0; // diagnostics only; never part of the byte-stable stream
};

inline json suite_report_to_json(const SuiteReport &r) {
    json results = json::array();
    for (const auto &t : r.results) {
        json item{{"trial", t.index}, {"pass", t.pass}};
        item["first_discrepancy"] =
            t.first_discrepancy ? json{t.first_discrepancy->first, t.first_discrepancy->second} : json(nullptr);
        if (!t.note.empty()) item["note"] = t.note;
        results.push_back(std::move(item));
    }
    return json{{"suite", r.suite}, {"trials", r.trials},   {"order", r.order},
                {"seed", r.seed},   {"pass", r.pass},       {"results", results},
                {"schema", "suite_report/1"}};
}

} // namespace lzeta
