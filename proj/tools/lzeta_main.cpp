// lzeta: exact local L-factor and zeta-integral toolkit.
//
// Subcommands:
//   verify  -- run randomized verification suites, emit a SuiteReport (JSON)
//   eval    -- evaluate one local factor / weight from a JSON input file
//   report  -- run every suite and render a summary
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/schema error,
// 3 mathematical precondition violation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lzeta/suites.hpp"
#include "lzeta/version.hpp"

namespace {

using namespace lzeta;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct EvalPoint {
    mpq_class s1;
    mpq_class s2;
};

EvalPoint parse_at(const std::string &text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw parse_error("--at expects 's1,s2' with rational entries like 1/2,1/2");
    auto parse_one = [](std::string part) {
        mpq_class q;
        if (q.set_str(part, 10) != 0) throw parse_error("--at: malformed rational '" + part + "'");
        if (q.get_den() == 0) throw parse_error("--at: zero denominator");
        q.canonicalize();
        return q;
    };
    return EvalPoint{parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

json load_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception &e) {
        throw parse_error(std::string("invalid JSON input: ") + e.what());
    }
}

json scalar_value(const Scalar &v) { return json(to_string(v)); }

json value_at_point(const EulerFactor<Scalar> &factor, unsigned long p, const EvalPoint &at) {
    // Half-integer points stay exact in Q(i)[sqrt p]; anything else would need
    // a larger ring, so it is refused rather than silently approximated.
    Scalar x1 = detail::exact_power_point(p, at.s1);
    Scalar x2 = detail::exact_power_point(p, at.s2);
    return scalar_value(factor.eval(x1, x2));
}

json zeta_report_json(const ZetaReport<Scalar> &rep) {
    json out{{"order", rep.order}, {"equal", rep.equal}};
    out["brute"] = series_to_json(rep.brute);
    out["closed"] = series_to_json(rep.closed);
    out["first_discrepancy"] =
        rep.first_discrepancy ? json{rep.first_discrepancy->first, rep.first_discrepancy->second} : json(nullptr);
    return out;
}

void emit(const json &j) { std::cout << j.dump(2) << "\n"; }

int run_eval(const std::string &what, const std::string &input_path, int order,
             const std::optional<std::string> &at_text) {
    json input = load_input(input_path);
    std::optional<EvalPoint> at;
    if (at_text) at = parse_at(*at_text);

    if (what == "psi-rs") {
        UnramifiedRep<Scalar> Pi = parse_repspec(detail::require_field(input, "Pi", "eval psi-rs"), "Pi").to_exact();
        UnramifiedRep<Scalar> sigma =
            parse_repspec(detail::require_field(input, "sigma", "eval psi-rs"), "sigma").to_exact();
        EulerFactor<Scalar> closed = closed_psi_rs(Pi, sigma);
        json out{{"provenance",
                  json{{"identity", "unramified Rankin-Selberg zeta integral = L(s1, Pi x dual sigma)"},
                       {"sum", "sum over dominant m of lambda_Pi(m,0) lambda_{dual sigma}(m) X1^{|m|}"}}}};
        out["closed_factors"] = factors_to_json(closed);
        if (at) {
            out["value"] = value_at_point(closed, Pi.residue_cardinality(), *at);
        } else {
            out["report"] = zeta_report_json(
                make_zeta_report(brute_psi_rs(Pi, sigma, order), closed.expansion(order), order));
        }
        emit(out);
        return kExitPass;
    }
    if (what == "psi-checked") {
        UnramifiedRep<Scalar> sigma =
            parse_repspec(detail::require_field(input, "sigma", "eval psi-checked"), "sigma").to_exact();
        UnramifiedRep<Scalar> pi = parse_repspec(detail::require_field(input, "pi", "eval psi-checked"), "pi").to_exact();
        int f = input.value("f", 0);
        auto closed = closed_psi_checked(sigma, pi, f);
        json out{{"provenance",
                  json{{"identity",
                        "averaged-newvector zeta integral = L(s2, sigma x dual pi) times the truncation polynomial "
                        "sum_k (-1)^k e_k(dual pi) h_{f-k}(dual sigma) X2^{f(n-1)+k}"}}}};
        out["lfactor"] = factors_to_json(closed.lfactor);
        out["correction"] = series_to_json(closed.correction);
        if (at) {
            Scalar x2 = detail::exact_power_point(sigma.residue_cardinality(), at->s2);
            Scalar value = closed.lfactor.eval(Scalar(1), x2) * closed.correction.eval(Scalar(1), x2);
            out["value"] = scalar_value(value);
        } else {
            int d = f * (sigma.rank() - 1) + order;
            out["report"] = zeta_report_json(make_zeta_report(brute_psi_checked(sigma, pi, f, d), closed.expand(d), d));
        }
        emit(out);
        return kExitPass;
    }
    if (what == "omega") {
        UnramifiedRep<Scalar> Pi = parse_repspec(detail::require_field(input, "Pi", "eval omega"), "Pi").to_exact();
        UnramifiedRep<Scalar> pi = parse_repspec(detail::require_field(input, "pi", "eval omega"), "pi").to_exact();
        EulerFactor<Scalar> closed = closed_omega(Pi, pi);
        json out{{"provenance",
                  json{{"identity",
                        "degenerate-term local factor = L(s1+s2, Pi x dual pi) L(n s1, dual Pi) / "
                        "L((n+1)s1+s2, dual pi)"}}}};
        out["closed_factors"] = factors_to_json(closed);
        if (at) {
            out["value"] = value_at_point(closed, Pi.residue_cardinality(), *at);
        } else {
            out["report"] = zeta_report_json(make_zeta_report(brute_omega(Pi, pi, order), closed.expansion(order), order));
        }
        emit(out);
        return kExitPass;
    }
    if (what == "l2") {
        UnramifiedRep<Scalar> sigma = parse_repspec(detail::require_field(input, "sigma", "eval l2"), "sigma").to_exact();
        UnramifiedRep<Scalar> sigma2 =
            input.contains("sigma2") ? parse_repspec(input["sigma2"], "sigma2").to_exact() : sigma.dual();
        EulerFactor<Scalar> closed = closed_l2(sigma, sigma2);
        json out{{"provenance",
                  json{{"identity",
                        "newvector L2 pairing: Cauchy-type factorization L(s, sigma x sigma') with the "
                        "(1 - X1^n e_n e_n') numerator; at sigma' = dual sigma and X1 = 1/p this is "
                        "L(1, sigma x dual sigma)/zeta_p(n)"}}}};
        out["closed_factors"] = factors_to_json(closed);
        if (at) {
            out["value"] = value_at_point(closed, sigma.residue_cardinality(), *at);
        } else {
            out["report"] =
                zeta_report_json(make_zeta_report(l2_series(sigma, sigma2, order), closed.expansion(order), order));
        }
        emit(out);
        return kExitPass;
    }
    if (what == "h-check") {
        UnramifiedRep<Scalar> sigma =
            parse_repspec(detail::require_field(input, "sigma", "eval h-check"), "sigma").to_exact();
        UnramifiedRep<Scalar> pi = parse_repspec(detail::require_field(input, "pi", "eval h-check"), "pi").to_exact();
        int f = input.value("f", 0);
        mpq_class s2 = at ? at->s2 : mpq_class(1, 2);
        Scalar x2 = detail::exact_power_point(sigma.residue_cardinality(), s2);
        Scalar value;
        if (input.contains("descriptor")) {
            value = h_check_dual_gated(parse_descriptor(input["descriptor"]), sigma, pi, f, x2);
        } else {
            value = h_check_dual(sigma, pi, f, x2);
        }
        emit(json{{"provenance",
                   json{{"identity", "dual-side weight: zeta_p(n)/L(1, sigma x dual sigma) times the truncation "
                                     "polynomial at s2; vanishes off the unramified spectrum"}}},
                  {"value", scalar_value(value)}});
        return kExitPass;
    }
    if (what == "residue-local") {
        UnramifiedRep<Scalar> pi = parse_repspec(detail::require_field(input, "pi", "eval residue-local"), "pi").to_exact();
        int f = input.value("f", 0);
        SPoint s = at ? SPoint{at->s1, at->s2} : SPoint::central();
        Scalar value;
        if (input.contains("descriptor") &&
            parse_descriptor(input["descriptor"]).kind == RamifiedDescriptor::Kind::supercuspidal_tau) {
            value = Scalar(0);
        } else {
            value = residue_term_local(pi, f, s);
        }
        emit(json{{"provenance",
                   json{{"identity",
                         "residue-term local factor: L(1, pi x dual pi) L(1+n(1-s2), pi) L(1-n(1-s2), dual pi) "
                         "times the dual weight at sigma(pi, 1-s2), poles cancelled exactly"}}},
                  {"value", scalar_value(value)}});
        return kExitPass;
    }
    if (what == "main-term") {
        int n = detail::require_field(input, "n", "eval main-term").get<int>();
        std::vector<PrimeLocalData> data;
        for (const json &entry : detail::require_field(input, "data", "eval main-term"))
            data.push_back(parse_prime_local_data(entry));
        std::optional<size_t> p0;
        if (input.contains("p0_index") && !input["p0_index"].is_null()) p0 = input["p0_index"].get<size_t>();
        double d_inf = input.value("D_inf", 1.0);
        Scalar eps = input.contains("eps_p0") ? parse_scalar(input["eps_p0"].get<std::string>()) : Scalar(1);
        SPoint s = at ? SPoint{at->s1, at->s2} : SPoint::central();
        std::complex<double> v = main_term(std::span<const PrimeLocalData>(data), n, p0, d_inf, eps, s);
        emit(json{{"provenance",
                   json{{"identity",
                         "finite Euler-product main term: D_inf * prod zeta_p(n)/zeta_p(1) / eps_p0 * "
                         "prod L(1, Pi x dual pi) L(n/2, dual Pi) / L(1+n/2, dual pi)"}}},
                  {"value", json{v.real(), v.imag()}}});
        return kExitPass;
    }
    throw parse_error("unknown eval subcommand '" + what +
                      "' (expected psi-rs, psi-checked, omega, l2, h-check, residue-local, main-term)");
}

void print_timing(const SuiteReport &r) {
    std::cerr << "lzeta: suite " << r.suite << " finished in " << r.wall_ms << " ms\n";
}

int run_verify(const std::string &suite, SuiteOptions opt, bool timing_in_json) {
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        reports = run_all_suites(opt);
    } else {
        reports.push_back(run_suite(suite, opt));
    }
    bool pass = true;
    json out;
    json list = json::array();
    for (const auto &r : reports) {
        pass = pass && r.pass;
        json jr = suite_report_to_json(r);
        if (timing_in_json) jr["wall_ms"] = r.wall_ms; // opts into non-byte-stable output
        print_timing(r);
        list.push_back(std::move(jr));
    }
    if (suite == "all") {
        out = json{{"pass", pass}, {"suites", list}};
    } else {
        out = list[0];
    }
    emit(out);
    return pass ? kExitPass : kExitFail;
}

int run_report(const std::string &format, const SuiteOptions &opt) {
    std::vector<SuiteReport> reports = run_all_suites(opt);
    bool pass = true;
    for (const auto &r : reports) pass = pass && r.pass;
    if (format == "json") {
        json list = json::array();
        for (const auto &r : reports) {
            print_timing(r);
            list.push_back(suite_report_to_json(r));
        }
        emit(json{{"pass", pass}, {"schema", "report/1"}, {"suites", list}});
    } else {
        for (const auto &r : reports) {
            print_timing(r);
            int failed = 0;
            for (const auto &t : r.results) failed += t.pass ? 0 : 1;
            std::cout << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " (trials=" << r.trials
                      << ", order=" << r.order << ", failed=" << failed << ")\n";
        }
        std::cout << "overall: " << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact local L-factor, zeta-integral, and spectral-weight toolkit"};
    app.set_version_flag("--version", std::string(lzeta::kVersion));
    app.require_subcommand(1);

    std::string suite;
    std::string eval_what;
    std::string input_path;
    std::string at_text;
    std::string golden;
    std::string format = "text";
    SuiteOptions opt;
    int n_flag = 0, p_flag = 0;
    bool timing = false;

    CLI::App *verify = app.add_subcommand("verify", "run a verification suite (deterministic given --seed)");
    verify->add_option("--suite", suite, "suite name or 'all'")
        ->required()
        ->check(CLI::IsMember({"psi-rs", "psi-checked", "omega", "l2", "residue-lambda", "s-involution", "decay", "all"}));
    verify->add_option("--n", n_flag, "pin the rank n (default: the suite's grid)");
    verify->add_option("--p", p_flag, "pin the residue cardinality (default: the suite's grid)");
    verify->add_option("--order", opt.order, "truncation order (default 12; psi-checked uses f(n-1)+order)");
    verify->add_option("--trials", opt.trials, "random draws per grid cell (default 20)");
    verify->add_option("--seed", opt.seed, "RNG seed (default 1)");
    verify->add_option("--threads", opt.threads, "worker threads (default: all cores, or LZETA_THREADS)");
    verify->add_option("--golden", golden, "compare against a golden-coefficient fixture (psi-rs)");
    verify->add_flag("--timing", timing, "include wall time in the JSON (breaks byte-stability)");

    CLI::App *eval = app.add_subcommand("eval", "evaluate one local factor or weight");
    eval->add_option("what", eval_what, "psi-rs | psi-checked | omega | l2 | h-check | residue-local | main-term")
        ->required();
    eval->add_option("--input", input_path, "JSON input file (see schemas/)")->required();
    eval->add_option("--order", opt.order, "truncation order for series output (default 12)");
    eval->add_option("--at", at_text, "evaluate at s1,s2 (half-integer rationals, e.g. 1/2,1/2)");

    CLI::App *report = app.add_subcommand("report", "run every suite and render a summary");
    report->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    report->add_option("--order", opt.order, "truncation order (default 12)");
    report->add_option("--trials", opt.trials, "random draws per grid cell (default 20)");
    report->add_option("--seed", opt.seed, "RNG seed (default 1)");
    report->add_option("--threads", opt.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (n_flag > 0) opt.n = n_flag;
            if (p_flag > 0) opt.p = p_flag;
            if (!golden.empty()) opt.golden_path = golden;
            return run_verify(suite, opt, timing);
        }
        if (eval->parsed()) {
            std::optional<std::string> at;
            if (!at_text.empty()) at = at_text;
            return run_eval(eval_what, input_path, opt.order, at);
        }
        if (report->parsed()) {
            return run_report(format, opt);
        }
    } catch (const lzeta::parse_error &e) {
        std::cerr << "lzeta: input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lzeta::precondition_error &e) {
        std::cerr << "lzeta: precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const lzeta::error &e) {
        std::cerr << "lzeta: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception &e) {
        std::cerr << "lzeta: unexpected error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
