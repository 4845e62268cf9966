// Verification suites: randomized identity checks and numeric decay checks,
// runnable concurrently with byte-stable reports (results are reduced in
// trial-index order, so the thread count never changes the output).
#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <thread>

#include "json_io.hpp"
#include "rng.hpp"
#include "zeta.hpp"

namespace lzeta {

struct SuiteOptions {
    uint64_t seed = 1;
    int order = 12;
    int trials = 20;
    std::optional<int> n;
    std::optional<int> p;
    int threads = 0; // 0: hardware concurrency (or LZETA_THREADS)
    std::optional<std::string> golden_path;
};

inline const std::vector<std::string> &available_suites() {
    static const std::vector<std::string> names{"psi-rs",         "psi-checked", "omega", "l2",
                                                "residue-lambda", "s-involution", "decay"};
    return names;
}

namespace detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char *env = std::getenv("LZETA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

inline void run_tasks(std::vector<std::function<TrialResult()>> &tasks, std::vector<TrialResult> &out, int threads) {
    out.assign(tasks.size(), TrialResult{});
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            TrialResult r;
            try {
                r = tasks[i]();
            } catch (const error &e) {
                r.pass = false;
                r.note = std::string("error: ") + e.what();
            } catch (const std::exception &e) {
                r.pass = false;
                r.note = std::string("unexpected: ") + e.what();
            }
            r.index = static_cast<int>(i);
            out[i] = std::move(r);
        }
    };
    int nthreads = std::min<int>(threads, static_cast<int>(tasks.size()));
    if (nthreads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
}

inline std::vector<int> grid_values(const std::optional<int> &pin, std::initializer_list<int> defaults) {
    if (pin) return {*pin};
    return std::vector<int>(defaults);
}

inline std::string cell_note(int n, int p, int extra = -1, const char *extra_name = nullptr) {
    std::string s = "n=" + std::to_string(n) + " p=" + std::to_string(p);
    if (extra_name && extra >= 0) s += std::string(" ") + extra_name + "=" + std::to_string(extra);
    return s;
}

template <typename T>
TrialResult identity_result(const ZetaReport<T> &rep, std::string note) {
    TrialResult r;
    r.pass = rep.equal;
    r.first_discrepancy = rep.first_discrepancy;
    r.note = std::move(note);
    return r;
}

inline uint64_t suite_id(const std::string &name) {
    uint64_t h = 1469598103934665603ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Individual suites
// ---------------------------------------------------------------------------

inline SuiteReport run_psi_rs_suite(const SuiteOptions &opt) {
    std::vector<std::function<TrialResult()>> tasks;
    for (int n : detail::grid_values(opt.n, {2, 3, 4, 5})) {
        for (int p : detail::grid_values(opt.p, {2, 3, 5})) {
            for (int t = 0; t < opt.trials; ++t) {
                tasks.push_back([=]() {
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("psi-rs"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<Scalar> Pi(static_cast<unsigned long>(p), rng.random_satake(n + 1));
                    UnramifiedRep<Scalar> sigma(static_cast<unsigned long>(p), rng.random_satake(n));
                    auto rep = make_zeta_report(brute_psi_rs(Pi, sigma, opt.order),
                                                closed_psi_rs(Pi, sigma).expansion(opt.order), opt.order);
                    return detail::identity_result(rep, detail::cell_note(n, p, t, "trial"));
                });
            }
        }
    }
    SuiteReport report{.suite = "psi-rs", .trials = static_cast<int>(tasks.size()), .order = opt.order, .seed = opt.seed};
    detail::run_tasks(tasks, report.results, detail::resolve_threads(opt.threads));
    report.pass = std::all_of(report.results.begin(), report.results.end(), [](const TrialResult &r) { return r.pass; });
    return report;
}

inline SuiteReport run_psi_checked_suite(const SuiteOptions &opt) {
    constexpr int kMaxF = 6;
    std::vector<std::function<TrialResult()>> tasks;
    for (int n : detail::grid_values(opt.n, {2, 3, 4, 5})) {
        for (int p : detail::grid_values(opt.p, {2, 3, 5})) {
            for (int t = 0; t < opt.trials; ++t) {
                tasks.push_back([=]() {
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("psi-checked"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<Scalar> sigma(static_cast<unsigned long>(p), rng.random_satake_product_one(n));
                    UnramifiedRep<Scalar> pi(static_cast<unsigned long>(p), rng.random_satake_product_one(n - 1));
                    int max_order = kMaxF * (n - 1) + opt.order;
                    PsiCheckedBatch<Scalar> batch(sigma, pi, max_order);
                    TrialResult r;
                    r.pass = true;
                    r.note = detail::cell_note(n, p, t, "trial");
                    for (int f = 0; f <= kMaxF && r.pass; ++f) {
                        int order = f * (n - 1) + opt.order;
                        auto rep = make_zeta_report(batch.series(f, order), closed_psi_checked(sigma, pi, f).expand(order),
                                                    order);
                        if (!rep.equal) {
                            r.pass = false;
                            r.first_discrepancy = rep.first_discrepancy;
                            r.note += " f=" + std::to_string(f);
                        }
                    }
                    return r;
                });
            }
        }
    }
    SuiteReport report{.suite = "psi-checked", .trials = static_cast<int>(tasks.size()), .order = opt.order, .seed = opt.seed};
    detail::run_tasks(tasks, report.results, detail::resolve_threads(opt.threads));
    report.pass = std::all_of(report.results.begin(), report.results.end(), [](const TrialResult &r) { return r.pass; });
    return report;
}

inline SuiteReport run_omega_suite(const SuiteOptions &opt) {
    std::vector<std::function<TrialResult()>> tasks;
    for (int n : detail::grid_values(opt.n, {2, 3, 4})) {
        for (int p : detail::grid_values(opt.p, {2, 3, 5})) {
            for (int t = 0; t < opt.trials; ++t) {
                tasks.push_back([=]() {
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("omega"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<Scalar> Pi(static_cast<unsigned long>(p), rng.random_satake_product_one(n + 1));
                    UnramifiedRep<Scalar> pi(static_cast<unsigned long>(p), rng.random_satake(n - 1));
                    auto rep = make_zeta_report(brute_omega(Pi, pi, opt.order), closed_omega(Pi, pi).expansion(opt.order),
                                                opt.order);
                    return detail::identity_result(rep, detail::cell_note(n, p, t, "trial"));
                });
            }
        }
    }
    SuiteReport report{.suite = "omega", .trials = static_cast<int>(tasks.size()), .order = opt.order, .seed = opt.seed};
    detail::run_tasks(tasks, report.results, detail::resolve_threads(opt.threads));
    report.pass = std::all_of(report.results.begin(), report.results.end(), [](const TrialResult &r) { return r.pass; });
    return report;
}

inline SuiteReport run_l2_suite(const SuiteOptions &opt) {
    std::vector<std::function<TrialResult()>> tasks;
    // Exact series identity against the Cauchy-type closed form.
    for (int n : detail::grid_values(opt.n, {1, 2, 3, 4, 5})) {
        for (int p : detail::grid_values(opt.p, {2, 3, 5})) {
            for (int t = 0; t < opt.trials; ++t) {
                tasks.push_back([=]() {
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("l2"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<Scalar> sigma(static_cast<unsigned long>(p), rng.random_satake(n));
                    UnramifiedRep<Scalar> sigma2(static_cast<unsigned long>(p), rng.random_satake(n));
                    auto rep = make_zeta_report(l2_series(sigma, sigma2, opt.order),
                                                closed_l2(sigma, sigma2).expansion(opt.order), opt.order);
                    return detail::identity_result(rep, detail::cell_note(n, p, t, "trial"));
                });
            }
        }
    }
    // Numeric convergence of the partial sums at X = 1/p against the
    // newvector-norm value L(1, sigma x dual sigma)/zeta_p(n).
    for (int n : detail::grid_values(opt.n, {2, 3})) {
        for (int p : detail::grid_values(opt.p, {2, 3})) {
            for (int t = 0; t < opt.trials; ++t) {
                tasks.push_back([=]() {
                    using C = std::complex<double>;
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("l2-numeric"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<C> sigma(static_cast<unsigned long>(p), rng.random_unit_satake(n, 0.5));
                    C x{1.0 / static_cast<double>(p), 0.0};
                    C partial = l2_series(sigma, sigma.dual(), 40).eval_numeric(x, C{0.0, 0.0});
                    C target = local_L_rs(sigma, sigma.dual(), SVarSpec::s1()).eval(x, C{1.0, 0.0}) /
                               local_zeta<C>(SVarSpec{n, 0}).eval(x, C{1.0, 0.0});
                    double rel = std::abs(partial - target) / std::abs(target);
                    TrialResult r;
                    r.pass = rel < 1e-6;
                    r.note = detail::cell_note(n, p, t, "trial") + " numeric";
                    if (!r.pass) r.note += " rel_err=" + std::to_string(rel);
                    return r;
                });
            }
        }
    }
    SuiteReport report{.suite = "l2", .trials = static_cast<int>(tasks.size()), .order = opt.order, .seed = opt.seed};
    detail::run_tasks(tasks, report.results, detail::resolve_threads(opt.threads));
    report.pass = std::all_of(report.results.begin(), report.results.end(), [](const TrialResult &r) { return r.pass; });
    return report;
}

inline SuiteReport run_residue_lambda_suite(const SuiteOptions &opt) {
    std::vector<std::function<TrialResult()>> tasks;
    for (int n : detail::grid_values(opt.n, {2, 3, 4})) {
        for (int p : detail::grid_values(opt.p, {2, 3, 5})) {
            for (int t = 0; t < opt.trials; ++t) {
                tasks.push_back([=]() {
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("residue-lambda"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<Scalar> pi(static_cast<unsigned long>(p), rng.random_satake(n - 1));
                    UnramifiedRep<Scalar> sigma_dual =
                        sigma_pi_z(pi, Scalar::half_power_of_p(static_cast<unsigned long>(p), -1)).dual();
                    SchurEvaluator<Scalar> ev(sigma_dual);
                    TrialResult r;
                    r.pass = true;
                    r.note = detail::cell_note(n, p, t, "trial");
                    for (long rr = 0; rr <= 10 && r.pass; ++rr) {
                        std::vector<long> m(static_cast<size_t>(n), 0);
                        m[0] = rr;
                        if (residue_lambda_expand(pi, rr) != ev.schur(m)) {
                            r.pass = false;
                            r.first_discrepancy = ExponentPair{static_cast<int>(rr), 0};
                            r.note += " r=" + std::to_string(rr);
                        }
                    }
                    return r;
                });
            }
        }
    }
    SuiteReport report{.suite = "residue-lambda", .trials = static_cast<int>(tasks.size()), .order = opt.order,
                       .seed = opt.seed};
    detail::run_tasks(tasks, report.results, detail::resolve_threads(opt.threads));
    report.pass = std::all_of(report.results.begin(), report.results.end(), [](const TrialResult &r) { return r.pass; });
    return report;
}

inline SuiteReport run_s_involution_suite(const SuiteOptions &opt) {
    constexpr int kPointsPerTrial = 10;
    std::vector<std::function<TrialResult()>> tasks;
    for (int n : detail::grid_values(opt.n, {2, 3, 4, 5, 6})) {
        for (int t = 0; t < opt.trials; ++t) {
            tasks.push_back([=]() {
                DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("s-involution"),
                                                           static_cast<uint64_t>(n), static_cast<uint64_t>(t)));
                TrialResult r;
                r.pass = scheck(SPoint::central(), n) == SPoint::central();
                for (int k = 0; k < kPointsPerTrial && r.pass; ++k) {
                    SPoint s{rng.random_rational(60), rng.random_rational(60)};
                    r.pass = scheck(scheck(s, n), n) == s;
                }
                r.note = "n=" + std::to_string(n) + " trial=" + std::to_string(t);
                return r;
            });
        }
    }
    SuiteReport report{.suite = "s-involution", .trials = static_cast<int>(tasks.size()), .order = opt.order,
                       .seed = opt.seed};
    detail::run_tasks(tasks, report.results, detail::resolve_threads(opt.threads));
    report.pass = std::all_of(report.results.begin(), report.results.end(), [](const TrialResult &r) { return r.pass; });
    return report;
}

inline SuiteReport run_decay_suite(const SuiteOptions &opt) {
    using C = std::complex<double>;
    std::vector<std::function<TrialResult()>> tasks;
    for (int n : detail::grid_values(opt.n, {2, 3, 4, 5})) {
        for (int p : detail::grid_values(opt.p, {2, 3})) {
            for (int t = 0; t < opt.trials; ++t) {
                // (a) dual-weight decay: |Hcheck| p^{f(n-1)/2} <= 2^n (f+n)^{n-1}
                tasks.push_back([=]() {
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("decay-dual"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<C> sigma(static_cast<unsigned long>(p), rng.random_unit_satake(n, 0.7, true));
                    UnramifiedRep<C> pi(static_cast<unsigned long>(p), rng.random_unit_satake(n - 1, 0.7, true));
                    TrialResult r;
                    r.pass = true;
                    r.note = detail::cell_note(n, p, t, "trial") + " dual-weight";
                    for (int f = 0; f <= 10 && r.pass; ++f) {
                        C x2 = std::pow(C{static_cast<double>(p), 0.0}, C{-0.5, -0.29});
                        double scaled = std::abs(h_check_dual(sigma, pi, f, x2)) *
                                        std::pow(static_cast<double>(p), f * (n - 1) / 2.0);
                        double majorant = std::pow(2.0, n) * std::pow(static_cast<double>(f + n), n - 1);
                        if (scaled > majorant) {
                            r.pass = false;
                            r.note += " f=" + std::to_string(f);
                        }
                    }
                    return r;
                });
                // (b) residue-point decay against its explicit majorant
                tasks.push_back([=]() {
                    DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("decay-residue"),
                                                               static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                               static_cast<uint64_t>(t)));
                    UnramifiedRep<C> pi(static_cast<unsigned long>(p), rng.random_unit_satake(n - 1, 0.7, true));
                    TrialResult r;
                    r.pass = true;
                    r.note = detail::cell_note(n, p, t, "trial") + " residue-point";
                    double pd = static_cast<double>(p);
                    for (int f = 0; f <= 10 && r.pass; ++f) {
                        double value = std::abs(h_check_residue_point(pi, f));
                        double majorant = 0.0; // zeta ratio <= 1, |e_k| <= binom, |lambda| <= weyl_dim
                        for (int k = 0; k <= std::min(f, n - 1); ++k) {
                            double lam = 0.0;
                            for (long j = 0; j <= f - k; ++j) {
                                std::vector<long> w(static_cast<size_t>(n) - 1, 0);
                                w[0] = j;
                                lam += weyl_dim(std::span<const long>(w)).get_d() *
                                       std::pow(pd, j / 2.0 - (f - k - j) * (n - 1) / 2.0);
                            }
                            double binom = 1.0;
                            for (int u = 0; u < k; ++u) binom = binom * (n - 1 - u) / (u + 1);
                            majorant += binom * lam * std::pow(pd, -(f * (n - 1.0) + k) / 2.0);
                        }
                        if (value > majorant * (1.0 + 1e-9)) {
                            r.pass = false;
                            r.note += " f=" + std::to_string(f);
                        }
                    }
                    return r;
                });
                // (c) central-valuation tails of the big zeta integral
                if (n <= 3) {
                    tasks.push_back([=]() {
                        DeterministicRng rng(DeterministicRng::mix(opt.seed, detail::suite_id("decay-tail"),
                                                                   static_cast<uint64_t>(n) * 1000 + static_cast<uint64_t>(p),
                                                                   static_cast<uint64_t>(t)));
                        UnramifiedRep<C> Pi(static_cast<unsigned long>(p), rng.random_unit_satake(n + 1, 0.5));
                        UnramifiedRep<C> xi(static_cast<unsigned long>(p), rng.random_unit_satake(n - 1, 0.5));
                        TrialResult r;
                        r.pass = true;
                        r.note = detail::cell_note(n, p, t, "trial") + " whittaker-tail";
                        for (long l = 0; l <= 6 && r.pass; ++l) {
                            auto tail = whittaker_tail_check(Pi, xi, l, {0.5, 0.0}, 16);
                            if (!tail.value_within_majorants || !tail.uniform_in_l ||
                                tail.scaled_value > tail.majorant_uniform_l0 * (1.0 + 1e-9)) {
                                r.pass = false;
                                r.note += " l=" + std::to_string(l);
                            }
                        }
                        return r;
                    });
                }
            }
        }
    }
    SuiteReport report{.suite = "decay", .trials = static_cast<int>(tasks.size()), .order = opt.order, .seed = opt.seed};
    detail::run_tasks(tasks, report.results, detail::resolve_threads(opt.threads));
    report.pass = std::all_of(report.results.begin(), report.results.end(), [](const TrialResult &r) { return r.pass; });
    return report;
}

// ---------------------------------------------------------------------------
// Golden-coefficient comparison (fault-detection fixture support)
// ---------------------------------------------------------------------------

inline SuiteReport run_golden_check(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw parse_error("golden: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw parse_error(std::string("golden: invalid JSON: ") + e.what());
    }
    std::string suite = j.value("suite", std::string());
    if (suite != "psi-rs") throw parse_error("golden: only the psi-rs suite ships golden fixtures");
    UnramifiedRep<Scalar> Pi = parse_repspec(detail::require_field(j, "Pi", "golden"), "golden.Pi").to_exact();
    UnramifiedRep<Scalar> sigma = parse_repspec(detail::require_field(j, "sigma", "golden"), "golden.sigma").to_exact();
    int order = detail::require_field(j, "order", "golden").get<int>();
    Series2<Scalar> brute = brute_psi_rs(Pi, sigma, order);

    SuiteReport report{.suite = "psi-rs", .trials = 1, .order = order, .seed = 0};
    TrialResult r;
    r.index = 0;
    r.pass = true;
    r.note = "golden:" + path.substr(path.find_last_of('/') + 1);
    for (const json &entry : detail::require_field(j, "coefficients", "golden")) {
        int d1 = entry.at("d1").get<int>();
        int d2 = entry.at("d2").get<int>();
        Scalar expect = parse_scalar(entry.at("value").get<std::string>());
        if (!brute.in_range(d1, d2) || !(brute.at(d1, d2) == expect)) {
            r.pass = false;
            r.first_discrepancy = ExponentPair{d1, d2};
            r.note += " mismatch at X1^" + std::to_string(d1) + " X2^" + std::to_string(d2);
            break;
        }
    }
    report.results.push_back(std::move(r));
    report.pass = report.results[0].pass;
    return report;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline SuiteReport run_suite(const std::string &name, const SuiteOptions &opt) {
    auto timed = [&](SuiteReport (*fn)(const SuiteOptions &)) {
        auto start = std::chrono::steady_clock::now();
        SuiteReport r = fn(opt);
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return r;
    };
    if (opt.golden_path) {
        if (name != "psi-rs") throw parse_error("golden fixtures exist only for suite psi-rs");
        return run_golden_check(*opt.golden_path);
    }
    if (name == "psi-rs") return timed(run_psi_rs_suite);
    if (name == "psi-checked") return timed(run_psi_checked_suite);
    if (name == "omega") return timed(run_omega_suite);
    if (name == "l2") return timed(run_l2_suite);
    if (name == "residue-lambda") return timed(run_residue_lambda_suite);
    if (name == "s-involution") return timed(run_s_involution_suite);
    if (name == "decay") return timed(run_decay_suite);
    throw parse_error("unknown suite '" + name + "'");
}

inline std::vector<SuiteReport> run_all_suites(const SuiteOptions &opt) {
    std::vector<SuiteReport> out;
    for (const std::string &name : available_suites()) out.push_back(run_suite(name, opt));
    return out;
}

} // namespace lzeta
