#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hodgeint/closed_forms.hpp"
#include "hodgeint/engine.hpp"
#include "hodgeint/localize.hpp"

// Named verification suites.  Every check is an exact comparison of two
// rationals computed along independent routes (engine vs closed form, two
// linearizations, two series constructions); pass means lhs == rhs, with no
// tolerance anywhere.

namespace hodgeint {

struct CheckResult {
    std::string id;
    Rat lhs;
    Rat rhs;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct SuiteOptions {
    int max_genus = 3;
    long max_degree = 4;
    int order = 8; // truncation order for series-level comparisons
    int threads = 1;
};

namespace detail {

using Check = std::pair<std::string, std::function<std::pair<Rat, Rat>()>>;

inline void parallel_for(int threads, int njobs, const std::function<void(int)>& fn) {
    if (threads <= 1 || njobs <= 1) {
        for (int i = 0; i < njobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= njobs) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min(threads, njobs);
    pool.reserve(n);
    for (int w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Runs the checks (possibly on a thread pool; results stay in input order)
/// and assembles the report.
inline SuiteReport run_checks(std::string suite, std::vector<Check> checks, int threads) {
    SuiteReport report;
    report.suite = std::move(suite);
    report.checks.resize(checks.size());
    const auto start = std::chrono::steady_clock::now();
    parallel_for(threads, static_cast<int>(checks.size()), [&](int i) {
        auto [lhs, rhs] = checks[i].second();
        report.checks[i] = {checks[i].first, lhs, rhs, lhs == rhs};
    });
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

} // namespace detail

/// F(t,k) from the engine against ((t/2)/sin(t/2))^{k+1}, coefficient by
/// coefficient for g <= max_genus, plus the k = 0 row (the b_g integrals)
/// pushed one genus further.
inline SuiteReport suite_theorem2(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    const int G = std::max(1, opt.max_genus);
    const KSeries closed = series_pow_kplus1(sinc_half_inverse(2 * (G + 1)));
    for (int g = 1; g <= G; ++g) {
        for (int i = 0; i <= g; ++i) {
            Rat expected = closed[2 * g].coeff(i);
            checks.emplace_back("F(t^" + std::to_string(2 * g) + ",k^" + std::to_string(i) + ")",
                                [&engine, g, i, expected] {
                                    return std::pair<Rat, Rat>(engine.one_point(g, 2 * g - 2 + i, g - i),
                                                               expected);
                                });
        }
    }
    for (int g = 1; g <= G + 1; ++g) {
        checks.emplace_back("b(" + std::to_string(g) + ")", [&engine, g] {
            return std::pair<Rat, Rat>(engine.one_point(g, 2 * g - 2, g), b_closed(g));
        });
    }
    return detail::run_checks("theorem2", std::move(checks), opt.threads);
}

/// Multiple-cover contributions: localization sum vs closed form.
inline SuiteReport suite_theorem3(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 0; g <= opt.max_genus; ++g)
        for (long d = 1; d <= opt.max_degree; ++d)
            checks.emplace_back("C(" + std::to_string(g) + "," + std::to_string(d) + ")",
                                [&engine, g, d] {
                                    return std::pair<Rat, Rat>(C_localized(engine, g, d), C_closed(g, d));
                                });
    return detail::run_checks("theorem3", std::move(checks), opt.threads);
}

/// lambda_{g-1}^3 over Mbar_g: engine vs Bernoulli closed form.
inline SuiteReport suite_theorem4(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 2; g <= std::max(2, opt.max_genus); ++g)
        checks.emplace_back("lambda_{g-1}^3(g=" + std::to_string(g) + ")", [&engine, g] {
            std::vector<int> lambda(g, 0);
            lambda[g - 2] = 3;
            return std::pair<Rat, Rat>(engine.hodge_integral({g, {}, lambda}), lambda3_closed(g));
        });
    return detail::run_checks("theorem4", std::move(checks), opt.threads);
}

namespace detail {

/// Descending exponent vectors of given length and sum.
inline void exponent_multisets(int length, long total, int max_entry, std::vector<int>& cur,
                               const std::function<void(const std::vector<int>&)>& emit) {
    if (length == 0) {
        if (total == 0) emit(cur);
        return;
    }
    for (int k = static_cast<int>(std::min<long>(total, max_entry)); k >= 0; --k) {
        cur.push_back(k);
        exponent_multisets(length - 1, total - k, k, cur, emit);
        cur.pop_back();
    }
}

} // namespace detail

/// int psi^k lambda_g = multinomial * b_g over every valid exponent vector
/// with n <= 3 markings.
inline SuiteReport suite_lamg(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 0; g <= opt.max_genus; ++g) {
        for (int n = 1; n <= 3; ++n) {
            if (!(2 * g - 2 + n > 0)) continue;
            const long total = 2L * g - 3 + n;
            if (total < 0) continue;
            std::vector<int> cur;
            detail::exponent_multisets(n, total, static_cast<int>(total), cur,
                                       [&](const std::vector<int>& ks) {
                                           std::string id = "lamg(g=" + std::to_string(g) + ";k=";
                                           for (size_t i = 0; i < ks.size(); ++i)
                                               id += (i ? "," : "") + std::to_string(ks[i]);
                                           id += ")";
                                           std::vector<int> kcopy = ks;
                                           checks.emplace_back(id, [&engine, g, kcopy] {
                                               std::vector<int> lambda(g, 0);
                                               if (g > 0) lambda[g - 1] = 1;
                                               return std::pair<Rat, Rat>(
                                                   engine.hodge_integral({g, kcopy, lambda}),
                                                   lamg_closed(g, kcopy));
                                           });
                                       });
        }
    }
    return detail::run_checks("lamg", std::move(checks), opt.threads);
}

/// int psi^{k_1} psi^{k_2} lambda_g lambda_{g-1}: engine vs the combinatorial
/// closed form taken relative to the engine's own one-point base integral.
inline SuiteReport suite_lamgg(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 2; g <= std::max(2, opt.max_genus); ++g) {
        checks.emplace_back("lamgg.base(g=" + std::to_string(g) + ")", [&engine, g] {
            std::vector<int> lambda(g, 0);
            lambda[g - 1] = 1;
            lambda[g - 2] = 1;
            Rat base = engine.hodge_integral({g, {g - 1}, lambda});
            return std::pair<Rat, Rat>(base, lamgg_closed(g, {g - 1}, base));
        });
        for (int k1 = g - 1; k1 >= 1; --k1) {
            const int k2 = g - k1;
            if (k2 < 1 || k2 > k1) continue;
            std::string id = "lamgg(g=" + std::to_string(g) + ";k=" + std::to_string(k1) + "," +
                             std::to_string(k2) + ")";
            checks.emplace_back(id, [&engine, g, k1, k2] {
                std::vector<int> lambda(g, 0);
                lambda[g - 1] = 1;
                lambda[g - 2] = 1;
                Rat base = engine.hodge_integral({g, {g - 1}, lambda});
                return std::pair<Rat, Rat>(engine.hodge_integral({g, {k1, k2}, lambda}),
                                           lamgg_closed(g, {k1, k2}, base));
            });
        }
    }
    return detail::run_checks("lamgg", std::move(checks), opt.threads);
}

/// The c_g prediction as pure Bernoulli arithmetic.
inline SuiteReport suite_ihop(const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 1; g <= opt.max_genus; ++g)
        checks.emplace_back("ihop(g=" + std::to_string(g) + ")", [g] {
            auto pair = ihop_check(g);
            return std::pair<Rat, Rat>(pair.lhs, pair.rhs);
        });
    return detail::run_checks("ihop", std::move(checks), opt.threads);
}

/// The convolution, log-series and Zagier Bernoulli identities per genus.
inline SuiteReport suite_lemmas(const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 1; g <= opt.max_genus; ++g)
        for (const auto& check : bernoulli_identity_checks(g))
            checks.emplace_back(check.id, [check] { return std::pair<Rat, Rat>(check.lhs, check.rhs); });
    return detail::run_checks("lemmas", std::move(checks), opt.threads);
}

/// Localization relations: linearization independence of I_g and J_g, their
/// generating-series evaluations, and the multiplicativity f_xi = f_0^{xi+1}
/// together with the closed form of f_{-2}.
inline SuiteReport suite_localization(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    const int G = std::min(opt.max_genus, 3);

    for (int g = 1; g <= G; ++g) {
        checks.emplace_back("I(" + std::to_string(g) + ";0,0)=f0(it)[t^" + std::to_string(2 * g) + "]",
                            [&engine, g] {
                                Rat expected = substitute_it(engine.capped_lambda_series(0, g))[2 * g];
                                return std::pair<Rat, Rat>(I_g(engine, g, {0, 0}), expected);
                            });
        checks.emplace_back("J(" + std::to_string(g) + ";0,-1)=f0^2(it)[t^" + std::to_string(2 * g) + "]",
                            [&engine, g] {
                                Series f0_it = substitute_it(engine.capped_lambda_series(0, g));
                                return std::pair<Rat, Rat>(J_g(engine, g, {0, -1}), (f0_it * f0_it)[2 * g]);
                            });
        for (long a = -2; a <= 2; ++a) {
            for (long b = -2; b <= 2; ++b) {
                if (a == 0 && b == 0) continue;
                std::string tag = "(" + std::to_string(g) + ";" + std::to_string(a) + "," +
                                  std::to_string(b) + ")";
                checks.emplace_back("I" + tag + "=I(" + std::to_string(g) + ";0,0)", [&engine, g, a, b] {
                    return std::pair<Rat, Rat>(I_g(engine, g, {a, b}), I_g(engine, g, {0, 0}));
                });
                checks.emplace_back("J" + tag + "=J(" + std::to_string(g) + ";0,0)", [&engine, g, a, b] {
                    return std::pair<Rat, Rat>(J_g(engine, g, {a, b}), J_g(engine, g, {0, 0}));
                });
            }
        }
    }

    const int GP = std::max(1, opt.order / 2);
    for (long xi = -2; xi <= 2; ++xi) {
        for (int g = 1; g <= GP; ++g) {
            std::string id = "f_" + std::to_string(xi) + "=f_0^" + std::to_string(xi + 1) + "[t^" +
                             std::to_string(2 * g) + "]";
            checks.emplace_back(id, [&engine, xi, g, GP] {
                Rat lhs = engine.capped_lambda_series(xi, GP)[2 * g];
                Rat rhs = series_pow_int(engine.capped_lambda_series(0, GP), xi + 1)[2 * g];
                return std::pair<Rat, Rat>(lhs, rhs);
            });
        }
    }
    for (int g = 1; g <= GP; ++g) {
        checks.emplace_back("f_-2=sin(t/2)/(t/2)[t^" + std::to_string(2 * g) + "]", [&engine, g, GP] {
            return std::pair<Rat, Rat>(engine.capped_lambda_series(-2, GP)[2 * g],
                                       sin_half_over_half(2 * GP)[2 * g]);
        });
    }
    return detail::run_checks("localization", std::move(checks), opt.threads);
}

/// The degree-d partition relations, expected to vanish identically.
inline SuiteReport suite_partition_relation(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 1; g <= opt.max_genus; ++g)
        for (int d = 2; d <= opt.max_degree; ++d)
            checks.emplace_back("partition(g=" + std::to_string(g) + ",d=" + std::to_string(d) + ")",
                                [&engine, g, d] {
                                    return std::pair<Rat, Rat>(partition_relation(engine, g, d), Rat(0));
                                });
    return detail::run_checks("partition-relation", std::move(checks), opt.threads);
}

/// Vanishing statements from the canonical system: the capped Lambda(1)
/// integral, its f_{-1} = 1 reformulation, and the truncations of
/// c(E)/(1+psi_1) beyond degree 2g-2.
inline SuiteReport suite_zeroz(Engine& engine, const SuiteOptions& opt) {
    std::vector<detail::Check> checks;
    for (int g = 1; g <= opt.max_genus; ++g) {
        checks.emplace_back("zeroz(g=" + std::to_string(g) + ")", [&engine, g] {
            Rat sum(0);
            for (int i = 0; i <= g; ++i) {
                Rat term = engine.one_point(g, 2 * g - 2 + i, g - i);
                sum += (i % 2 == 0) ? term : -term;
            }
            return std::pair<Rat, Rat>(sum, Rat(0));
        });
        checks.emplace_back("f_-1(g=" + std::to_string(g) + ")=delta_0", [&engine, g] {
            return std::pair<Rat, Rat>(engine.capped_lambda_series(-1, g)[2 * g], Rat(0));
        });
        for (int j = 2 * g - 1; j <= 3 * g - 2; ++j) {
            std::string id = "cE_trunc(g=" + std::to_string(g) + ",j=" + std::to_string(j) + ")";
            checks.emplace_back(id, [&engine, g, j] {
                Rat sum(0);
                for (int i = 0; i <= g && i <= j; ++i) {
                    Rat term = engine.one_point(g, 3 * g - 2 - i, i);
                    sum += ((j - i) % 2 == 0) ? term : -term;
                }
                return std::pair<Rat, Rat>(sum, Rat(0));
            });
        }
    }
    return detail::run_checks("zeroz", std::move(checks), opt.threads);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "theorem2", "theorem3", "theorem4", "lamg",  "lamgg",
        "ihop",     "localization", "partition-relation", "zeroz", "lemmas"};
    return names;
}

inline SuiteReport run_suite(Engine& engine, const std::string& name, const SuiteOptions& opt) {
    if (name == "theorem2") return suite_theorem2(engine, opt);
    if (name == "theorem3") return suite_theorem3(engine, opt);
    if (name == "theorem4") return suite_theorem4(engine, opt);
    if (name == "lamg") return suite_lamg(engine, opt);
    if (name == "lamgg") return suite_lamgg(engine, opt);
    if (name == "ihop") return suite_ihop(opt);
    if (name == "localization") return suite_localization(engine, opt);
    if (name == "partition-relation") return suite_partition_relation(engine, opt);
    if (name == "zeroz") return suite_zeroz(engine, opt);
    if (name == "lemmas") return suite_lemmas(opt);
    throw domain_error("unknown suite \"" + name + "\"");
}

inline std::vector<SuiteReport> run_suites(Engine& engine, const std::vector<std::string>& names,
                                           const SuiteOptions& opt) {
    std::vector<SuiteReport> reports;
    reports.reserve(names.size());
    for (const auto& name : names) reports.push_back(run_suite(engine, name, opt));
    return reports;
}

} // namespace hodgeint
