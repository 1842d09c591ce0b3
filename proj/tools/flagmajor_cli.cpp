// Command-line front end: statistics over C_m wr S_n, canonical
// decomposition, Hilbert series, and named identity checks.
//
// Exit codes: 0 success, 1 usage or parse error, 2 enumeration budget
// exceeded, 3 verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "flagmajor/canonical.hpp"
#include "flagmajor/errors.hpp"
#include "flagmajor/invariant.hpp"
#include "flagmajor/stats.hpp"
#include "flagmajor/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFail = 3;

struct Budgets {
    long long group = flagmajor::kDefaultGroupBudget;
    long long tuples = flagmajor::kDefaultTupleBudget;
    long long degree = 12;
};

void add_budget_flags(CLI::App* cmd, Budgets* budgets) {
    cmd->add_option("--budget-group", budgets->group, "Largest group size enumerated")
        ->capture_default_str();
    cmd->add_option("--budget-tuples", budgets->tuples, "Largest tuple count enumerated")
        ->capture_default_str();
    cmd->add_option("--budget-degree", budgets->degree, "Largest series truncation degree")
        ->capture_default_str();
}

void check_degree(long long d, const Budgets& budgets) {
    if (d < 0 || d > budgets.degree)
        throw flagmajor::budget_error("requested degree exceeds --budget-degree");
}

int run_verify(const std::string& name, int m, int n, int t, long long d, int cap,
               const Budgets& budgets) {
    using namespace flagmajor;
    check_degree(d, budgets);
    VerificationReport report;
    if (name == "claim-2.1") {
        report = verify_claim_2_1(n, budgets.group);
    } else if (name == "thm-2.2") {
        report = verify_thm_2_2(n, budgets.group);
    } else if (name == "thm-2.2-negative") {
        report = verify_thm_2_2_negative(m, n, budgets.group);
    } else if (name == "phi-2.2") {
        report = verify_phi_2_2(n, budgets.group);
    } else if (name == "thm-3.1") {
        report = verify_thm_3_1(m, n, budgets.group);
    } else if (name == "lemma-3.2") {
        report = verify_lemma_3_2(m, n, budgets.group);
    } else if (name == "thm-4.1") {
        report = verify_thm_4_1(m, n, t, d, budgets.tuples, budgets.group);
    } else if (name == "gg1") {
        report = verify_gg1(t, n, d);
    } else if (name == "gg2") {
        report = verify_gg2(6, 5);
    } else if (name == "claim-5.1") {
        report = verify_claim_5_1(m, n, t, cap, budgets.group);
    } else if (name == "claim-5.2") {
        report = verify_claim_5_2(m, n, t, cap, budgets.group);
    } else if (name == "bijection-5.4") {
        report = verify_bijection_5_4(m, n, t, budgets.tuples, budgets.group);
    } else if (name == "example-5.5") {
        report = verify_example_5_5(n, d);
    } else {
        std::cerr << "unknown check: " << name << "\n";
        return kExitUsage;
    }
    std::cout << to_json(report) << "\n";
    return report.pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact statistics and invariant-theory series for C_m wr S_n"};
    app.require_subcommand(1);

    // stats
    int stats_m = 1, stats_n = 1;
    std::string stats_stat = "flag-major";
    std::string stats_format = "json";
    Budgets stats_budgets;
    bool stats_single_s0 = false;
    CLI::App* stats_cmd = app.add_subcommand("stats", "Exact distribution of a statistic");
    stats_cmd->add_option("--m", stats_m, "Color modulus")->required();
    stats_cmd->add_option("--n", stats_n, "Degree")->required();
    stats_cmd->add_option("--stat", stats_stat, "flag-major | major | length | log-sum")
        ->capture_default_str();
    stats_cmd->add_option("--format", stats_format, "json | csv")->capture_default_str();
    stats_cmd->add_flag("--s0-single-step", stats_single_s0,
                        "Length counts s_0 steps forward only (default also s_0^{-1})");
    add_budget_flags(stats_cmd, &stats_budgets);

    // decompose
    int dec_m = 1, dec_n = 1;
    std::string dec_perm;
    CLI::App* dec_cmd = app.add_subcommand("decompose", "Canonical factorization and flag-major");
    dec_cmd->add_option("--m", dec_m, "Color modulus")->required();
    dec_cmd->add_option("--n", dec_n, "Degree")->required();
    dec_cmd->add_option("--perm", dec_perm, "Window, e.g. \"2^1,1^0\" (or \"-2,1\" for m = 2)")
        ->required();

    // hilbert
    int hil_m = 1, hil_n = 1, hil_t = 1;
    long long hil_d = 8;
    std::string hil_which = "ratio";
    std::string hil_convention = "left";
    Budgets hil_budgets;
    CLI::App* hil_cmd = app.add_subcommand("hilbert", "Invariant-algebra Hilbert series");
    hil_cmd->add_option("--m", hil_m, "Color modulus")->required();
    hil_cmd->add_option("--n", hil_n, "Degree")->required();
    hil_cmd->add_option("--t", hil_t, "Tensor slots")->required();
    hil_cmd->add_option("--d", hil_d, "Truncation bound (total degree)")->capture_default_str();
    hil_cmd->add_option("--which", hil_which, "dia | tia | ratio | rhs")->capture_default_str();
    hil_cmd->add_option("--convention", hil_convention,
                        "Tuple product order for rhs: left | right")
        ->capture_default_str();
    add_budget_flags(hil_cmd, &hil_budgets);

    // verify
    std::string ver_name;
    int ver_m = 2, ver_n = 2, ver_t = 2, ver_cap = 4;
    long long ver_d = 8;
    Budgets ver_budgets;
    CLI::App* ver_cmd = app.add_subcommand("verify", "Run a named identity check");
    ver_cmd->add_option("check", ver_name, "Check name, e.g. thm-3.1")->required();
    ver_cmd->add_option("--m", ver_m, "Color modulus")->capture_default_str();
    ver_cmd->add_option("--n", ver_n, "Degree (or maximal degree)")->capture_default_str();
    ver_cmd->add_option("--t", ver_t, "Tensor slots")->capture_default_str();
    ver_cmd->add_option("--d", ver_d, "Truncation bound")->capture_default_str();
    ver_cmd->add_option("--cap", ver_cap, "Exponent box cap / degree cap")
        ->capture_default_str();
    add_budget_flags(ver_cmd, &ver_budgets);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats_cmd->parsed()) {
            const flagmajor::Statistic stat = flagmajor::parse_statistic(stats_stat);
            const flagmajor::S0Steps steps = stats_single_s0 ? flagmajor::S0Steps::Single
                                                             : flagmajor::S0Steps::WithInverse;
            const flagmajor::Distribution d =
                flagmajor::distribution(stats_n, stats_m, stat, stats_budgets.group, steps);
            if (stats_format == "json") {
                std::cout << flagmajor::to_json(d, stats_m, stats_n, stat) << "\n";
            } else if (stats_format == "csv") {
                std::cout << flagmajor::to_csv(d);
            } else {
                std::cerr << "unknown format: " << stats_format << "\n";
                return kExitUsage;
            }
            return kExitOk;
        }
        if (dec_cmd->parsed()) {
            const flagmajor::ColoredPermutation g =
                flagmajor::parse_window(dec_perm, dec_n, dec_m);
            const flagmajor::CanonicalWord w = flagmajor::decompose(g);
            std::cout << "{\"k\":[";
            for (size_t i = 0; i < w.exponents.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << w.exponents[i];
            }
            std::cout << "],\"flag_major\":" << flagmajor::flag_major(w) << "}\n";
            return kExitOk;
        }
        if (hil_cmd->parsed()) {
            check_degree(hil_d, hil_budgets);
            using flagmajor::to_json;
            if (hil_which == "dia") {
                std::cout << to_json(flagmajor::hilbert_dia(hil_m, hil_n, hil_t, hil_d)) << "\n";
            } else if (hil_which == "tia") {
                std::cout << to_json(flagmajor::hilbert_tia(hil_m, hil_n, hil_t, hil_d)) << "\n";
            } else if (hil_which == "ratio") {
                std::cout << to_json(flagmajor::series_div(
                                 flagmajor::hilbert_dia(hil_m, hil_n, hil_t, hil_d),
                                 flagmajor::hilbert_tia(hil_m, hil_n, hil_t, hil_d)))
                          << "\n";
            } else if (hil_which == "rhs") {
                flagmajor::ProductOrder order;
                if (hil_convention == "left") {
                    order = flagmajor::ProductOrder::LeftToRight;
                } else if (hil_convention == "right") {
                    order = flagmajor::ProductOrder::RightToLeft;
                } else {
                    std::cerr << "unknown convention: " << hil_convention << "\n";
                    return kExitUsage;
                }
                std::cout << to_json(flagmajor::rhs_theorem41(hil_m, hil_n, hil_t, order,
                                                              hil_budgets.tuples,
                                                              hil_budgets.group))
                          << "\n";
            } else {
                std::cerr << "unknown series: " << hil_which << "\n";
                return kExitUsage;
            }
            return kExitOk;
        }
        if (ver_cmd->parsed())
            return run_verify(ver_name, ver_m, ver_n, ver_t, ver_d, ver_cap, ver_budgets);
    } catch (const flagmajor::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
