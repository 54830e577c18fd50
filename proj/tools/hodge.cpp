// Command-line frontend: individual integrals, generating-function tables and
// the named verification suites.  All values print as exact rationals.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hodgeint/closed_forms.hpp"
#include "hodgeint/engine.hpp"
#include "hodgeint/json_io.hpp"
#include "hodgeint/localize.hpp"
#include "hodgeint/report_io.hpp"
#include "hodgeint/suites.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

/// Lambda multiset ("2,1,1" meaning lambda_2 lambda_1^2) to an exponent vector.
std::vector<int> lambda_exponents(const std::vector<int>& indices) {
    int top = 0;
    for (int j : indices) {
        if (j < 1) throw hodgeint::domain_error("lambda index must be >= 1");
        top = std::max(top, j);
    }
    std::vector<int> exps(top, 0);
    for (int j : indices) ++exps[j - 1];
    return exps;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    hodgeint::SuiteOptions opt;
    std::string format = "text";
    bool no_timing = false;
};

int run(int argc, char** argv) {
    CLI::App app{"exact calculator for psi/kappa/lambda integrals over moduli "
                 "spaces of stable curves, with identity verification suites"};
    app.require_subcommand(1);

    std::string cache_file;
    app.add_option("--cache-file", cache_file,
                   "flat integral-cache file to preload and update (key<TAB>num/den lines)");

    int genus = 0;
    std::string exps_arg, kappas_arg, lambdas_arg;

    auto* bern = app.add_subcommand("bern", "Bernoulli number B_m");
    int bern_m = 0;
    bern->add_option("m", bern_m, "index")->required();

    auto* psi = app.add_subcommand("psi", "psi intersection number <tau_{k_1}...tau_{k_n}>_g");
    psi->add_option("--genus", genus, "genus")->required();
    psi->add_option("--exps", exps_arg, "comma-separated psi exponents, one per marking");

    auto* kappa = app.add_subcommand("kappa", "psi integral with kappa-class insertions");
    kappa->add_option("--genus", genus, "genus")->required();
    kappa->add_option("--exps", exps_arg, "comma-separated psi exponents");
    kappa->add_option("--kappas", kappas_arg, "comma-separated kappa indices");

    auto* hodge = app.add_subcommand("hodge", "integral of a psi-lambda monomial");
    hodge->add_option("--genus", genus, "genus")->required();
    hodge->add_option("--exps", exps_arg, "comma-separated psi exponents");
    hodge->add_option("--lambdas", lambdas_arg,
                      "comma-separated lambda indices with repetition (\"1,1,1\" = lambda_1^3)");

    auto* series = app.add_subcommand("series", "generating functions as JSON series");
    std::string series_kind;
    int series_order = 8;
    long series_xi = 0;
    series->add_option("--kind", series_kind, "one of f0, F, c, fxi")
        ->required()
        ->check(CLI::IsMember({"f0", "F", "c", "fxi"}));
    series->add_option("--order", series_order, "truncation order in t (default 8)");
    series->add_option("--xi", series_xi, "integer xi for --kind fxi");

    auto* cover = app.add_subcommand("cover", "multiple-cover contribution C(g,d)");
    long cover_degree = 1;
    std::string cover_method = "closed";
    cover->add_option("--genus", genus, "genus")->required();
    cover->add_option("--degree", cover_degree, "degree")->required();
    cover->add_option("--method", cover_method, "closed (Bernoulli formula) or localized (engine sum)")
        ->check(CLI::IsMember({"closed", "localized"}));

    auto* verify = app.add_subcommand("verify", "run named verification suites");
    VerifyArgs vargs;
    verify->add_option("suites", vargs.suites, "suite names (default: all)");
    verify->add_option("--suite", vargs.suites, "suite name (may repeat; default: all)");
    verify->add_option("--max-genus", vargs.opt.max_genus, "genus bound (default 3)");
    verify->add_option("--max-degree", vargs.opt.max_degree, "degree bound (default 4)");
    verify->add_option("--order", vargs.opt.order, "series truncation order (default 8)");
    verify->add_option("--threads", vargs.opt.threads, "worker threads (default 1)");
    verify->add_option("--format", vargs.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_flag("--no-timing", vargs.no_timing, "suppress elapsed-time fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        hodgeint::Engine engine;
        if (!cache_file.empty()) {
            std::ifstream in(cache_file);
            if (in) engine.cache().load(in);
        }
        int status = 0;

        if (*bern) {
            std::cout << hodgeint::bernoulli(bern_m).str() << "\n";
        } else if (*psi) {
            std::cout << engine.psi_integral({genus, parse_int_list(exps_arg)}).str() << "\n";
        } else if (*kappa) {
            std::cout << engine
                             .kappa_psi_integral(
                                 {genus, parse_int_list(exps_arg), parse_int_list(kappas_arg)})
                             .str()
                      << "\n";
        } else if (*hodge) {
            std::cout << engine
                             .hodge_integral({genus, parse_int_list(exps_arg),
                                              lambda_exponents(parse_int_list(lambdas_arg))})
                             .str()
                      << "\n";
        } else if (*series) {
            const int G = std::max(1, series_order / 2);
            nlohmann::json j;
            if (series_kind == "F") {
                j = engine.F_table(G);
            } else if (series_kind == "f0") {
                j = engine.capped_lambda_series(0, G);
            } else if (series_kind == "fxi") {
                j = engine.capped_lambda_series(series_xi, G);
            } else { // c
                hodgeint::Series c(2 * G);
                for (int g = 1; g <= G; ++g) c[2 * g] = engine.one_point(g, 2 * g - 1, g - 1);
                j = c;
            }
            std::cout << j.dump() << "\n";
        } else if (*cover) {
            hodgeint::Rat value = cover_method == "closed"
                                      ? hodgeint::C_closed(genus, cover_degree)
                                      : hodgeint::C_localized(engine, genus, cover_degree);
            std::cout << value.str() << "\n";
        } else if (*verify) {
            std::vector<std::string> names = vargs.suites;
            bool expand_all = names.empty();
            for (const auto& name : names)
                if (name == "all") expand_all = true;
            if (expand_all) names = hodgeint::suite_names();
            for (const auto& name : names) {
                if (std::find(hodgeint::suite_names().begin(), hodgeint::suite_names().end(), name) ==
                    hodgeint::suite_names().end()) {
                    std::cerr << "error: unknown suite \"" << name << "\"\n";
                    return 2;
                }
            }
            auto reports = hodgeint::run_suites(engine, names, vargs.opt);
            if (vargs.format == "json")
                std::cout << hodgeint::render_json(reports, !vargs.no_timing);
            else if (vargs.format == "csv")
                std::cout << hodgeint::render_csv(reports);
            else
                std::cout << hodgeint::render_text(reports, !vargs.no_timing);
            for (const auto& report : reports)
                if (!report.all_pass()) status = 1;
        }

        if (!cache_file.empty()) {
            std::ofstream out(cache_file, std::ios::trunc);
            engine.cache().save(out);
        }
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
