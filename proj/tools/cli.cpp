#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "permstat/io.hpp"

namespace permstat::cli {

namespace {

SubsetB subset_of_mask(std::uint32_t mask, int rank) {
    std::vector<int> members;
    for (int i = 1; i <= rank; ++i) {
        if ((mask >> (i - 1)) & 1) members.push_back(i);
    }
    return SubsetB(std::move(members));
}

Statistic default_statistic(GroupLabel label) {
    return label == GroupLabel::A ? Statistic::ell_a : Statistic::ell_l;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"permutation statistics, canonical words, and bijection checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string stats_window;
    auto* stats_cmd = app.add_subcommand("stats", "statistics of one window");
    stats_cmd->add_option("window", stats_window, "window, e.g. 3,-6,-4,5,2,-1")
        ->required();

    std::string theta_window;
    bool theta_stages_flag = false;
    auto* theta_cmd =
        app.add_subcommand("theta", "image under the bijection on signed even windows");
    theta_cmd->add_option("window", theta_window, "window in L")->required();
    theta_cmd->add_flag("--stages", theta_stages_flag, "dump the pipeline stages");

    std::string psi_window;
    bool psi_stages_flag = false;
    auto* psi_cmd =
        app.add_subcommand("psi", "image under the bijection on even windows");
    psi_cmd->add_option("window", psi_window, "window in A")->required();
    psi_cmd->add_flag("--stages", psi_stages_flag, "dump the pipeline stages");

    std::string phi_word;
    bool phi_trace_flag = false;
    auto* phi_cmd = app.add_subcommand("phi", "Foata transformation of a word");
    phi_cmd->add_option("word", phi_word, "word, e.g. 2,3,5,1,4")->required();
    phi_cmd->add_flag("--trace", phi_trace_flag, "show the compartment trace");

    std::string canonical_window;
    std::string canonical_group;
    auto* canonical_cmd =
        app.add_subcommand("canonical", "canonical factor word of a window");
    canonical_cmd->add_option("window", canonical_window, "window")->required();
    canonical_cmd->add_option("--group", canonical_group, "alphabet: s or a")
        ->required()
        ->check(CLI::IsMember({"s", "a"}));

    std::string decompose_window;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "canonical splitting sigma * u of a window in L");
    decompose_cmd->add_option("window", decompose_window, "window in L")->required();

    int poly_rank = 0;
    std::string poly_group = "l";
    std::string poly_stat;
    std::string poly_subset;
    bool poly_all_subsets = false;
    bool poly_formula = false;
    bool poly_csv = false;
    int poly_cap = kDefaultRankCap;
    int poly_workers = 0;
    auto* poly_cmd = app.add_subcommand("poly", "distribution polynomial of a statistic");
    poly_cmd->add_option("--rank", poly_rank, "window rank")->required();
    poly_cmd->add_option("--group", poly_group, "group: s, a, b, or l (default l)")
        ->check(CLI::IsMember({"s", "a", "b", "l"}));
    poly_cmd->add_option("--stat", poly_stat,
                         "statistic: ell_l, nrmaj, ell_a, rmaj (default by group)");
    auto* poly_subset_opt = poly_cmd->add_option(
        "--subset", poly_subset, "restrict to Neg(w^-1) within this set, e.g. 1,3,4");
    poly_cmd->add_flag("--all-subsets", poly_all_subsets,
                       "one polynomial per subset of [rank]")
        ->excludes(poly_subset_opt);
    poly_cmd->add_flag("--formula", poly_formula,
                       "emit the closed-form product instead of enumerating");
    poly_cmd->add_flag("--csv", poly_csv, "CSV table output");
    poly_cmd->add_option("--cap", poly_cap, "enumeration rank cap (default 8)")
        ->check(CLI::Range(1, kMaxEnumerableRank));
    poly_cmd->add_option("--workers", poly_workers, "worker threads (0 = auto)");

    std::string verify_identity;
    int verify_rank = 0;
    std::string verify_group = "l";
    std::string verify_subset;
    int verify_cap = kDefaultRankCap;
    int verify_workers = 0;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive identity checks");
    verify_cmd->add_option("--identity", verify_identity, "equidist, theta, or psi")
        ->required()
        ->check(CLI::IsMember({"equidist", "theta", "psi"}));
    verify_cmd->add_option("--rank", verify_rank, "window rank")->required();
    verify_cmd->add_option("--group", verify_group,
                           "equidist only: l (default) or a")
        ->check(CLI::IsMember({"l", "a"}));
    auto* verify_subset_opt = verify_cmd->add_option(
        "--subset", verify_subset, "equidist over L: check this subset only");
    verify_cmd->add_option("--cap", verify_cap, "enumeration rank cap (default 8)")
        ->check(CLI::Range(1, kMaxEnumerableRank));
    verify_cmd->add_option("--workers", verify_workers, "worker threads (0 = auto)");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("permstat");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*stats_cmd) {
            const auto sigma = parse_window(stats_window);
            const auto bundle = compute_statistics(sigma);
            if (as_json) {
                out << statistics_json(bundle) << "\n";
            } else {
                out << format_statistics_text(bundle);
            }
            return 0;
        }

        if (*theta_cmd) {
            const auto pi = parse_window(theta_window);
            if (theta_stages_flag) {
                const auto st = theta_stages(pi);
                out << (as_json ? theta_stages_json(st) + "\n"
                                : format_theta_stages_text(st));
            } else {
                const auto image = theta(pi, true);
                out << (as_json ? image_json(pi, image) + "\n"
                                : format_window(image) + "\n");
            }
            return 0;
        }

        if (*psi_cmd) {
            const auto v = parse_window(psi_window);
            if (psi_stages_flag) {
                const auto st = psi_stages(v);
                out << (as_json ? psi_stages_json(st) + "\n"
                                : format_psi_stages_text(st));
            } else {
                const auto image = psi(v);
                out << (as_json ? image_json(v, image) + "\n"
                                : format_window(image) + "\n");
            }
            return 0;
        }

        if (*phi_cmd) {
            const auto r = parse_word(phi_word);
            if (phi_trace_flag) {
                const auto trace = phi_trace(r);
                out << (as_json ? trace_json(r, trace) + "\n" : format_trace(trace));
            } else {
                const auto image = phi(r);
                out << (as_json ? phi_json(r, image) + "\n"
                                : format_word(image) + "\n");
            }
            return 0;
        }

        if (*canonical_cmd) {
            const auto w = parse_window(canonical_window);
            if (canonical_group == "s") {
                const auto word = s_factorize(w);
                out << (as_json ? canonical_json(w, word) + "\n"
                                : format_canonical(word) + "\n");
            } else {
                const auto word = a_factorize(w);
                out << (as_json ? canonical_json(w, word) + "\n"
                                : format_canonical(word) + "\n");
            }
            return 0;
        }

        if (*decompose_cmd) {
            const auto pi = parse_window(decompose_window);
            const auto d = decompose(pi);
            if (as_json) {
                out << decomposition_json(d) << "\n";
            } else {
                out << "sigma = " << format_window(d.sigma) << "\n";
                out << "u     = " << format_window(d.u) << "\n";
            }
            return 0;
        }

        if (*poly_cmd) {
            const GroupLabel label = parse_group_label(poly_group);
            const Statistic stat = poly_stat.empty() ? default_statistic(label)
                                                     : parse_statistic(poly_stat);
            auto compute = [&](const std::optional<SubsetB>& subset) {
                if (poly_formula) {
                    if (label == GroupLabel::L) {
                        return product_formula_l(poly_rank,
                                                 subset.value_or(SubsetB{}));
                    }
                    if (label == GroupLabel::A) {
                        if (subset) {
                            throw std::invalid_argument(
                                "subsets make sense over L only");
                        }
                        return product_formula_a(poly_rank);
                    }
                    throw std::invalid_argument(
                        "no closed form over this group");
                }
                return poly_over(label, poly_rank, stat, subset, poly_cap,
                                 poly_workers);
            };

            if (poly_all_subsets) {
                if (label != GroupLabel::L) {
                    throw std::invalid_argument("--all-subsets applies to L only");
                }
                std::vector<std::pair<SubsetB, QPolynomial>> rows;
                const std::uint32_t subsets = 1u << poly_rank;
                for (std::uint32_t m = 0; m < subsets; ++m) {
                    SubsetB subset = subset_of_mask(m, poly_rank);
                    QPolynomial p = compute(subset);
                    rows.emplace_back(std::move(subset), std::move(p));
                }
                if (as_json) {
                    out << poly_table_json(poly_rank, rows) << "\n";
                } else if (poly_csv) {
                    out << poly_csv_header() << "\n";
                    for (const auto& [subset, p] : rows) {
                        out << poly_csv_row(poly_rank, subset, p) << "\n";
                    }
                } else {
                    for (const auto& [subset, p] : rows) {
                        out << "B = " << format_subset(subset) << ": "
                            << p.to_string() << "\n";
                    }
                }
                return 0;
            }

            std::optional<SubsetB> subset;
            if (poly_subset_opt->count() > 0) subset = parse_subset(poly_subset);
            const QPolynomial p = compute(subset);
            if (as_json) {
                out << poly_json(p) << "\n";
            } else if (poly_csv) {
                out << poly_csv_header() << "\n"
                    << poly_csv_row(poly_rank, subset.value_or(SubsetB{}), p)
                    << "\n";
            } else {
                out << p.to_string() << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            std::vector<VerificationReport> reports;
            if (verify_identity == "equidist") {
                const GroupLabel label = parse_group_label(verify_group);
                if (label == GroupLabel::A) {
                    if (verify_subset_opt->count() > 0) {
                        throw std::invalid_argument("subsets make sense over L only");
                    }
                    reports.push_back(
                        check_equidistribution_a(verify_rank, verify_cap,
                                                 verify_workers));
                } else if (verify_subset_opt->count() > 0) {
                    reports.push_back(check_equidistribution(
                        verify_rank, parse_subset(verify_subset), verify_cap,
                        verify_workers));
                } else {
                    reports = check_equidistribution_all_subsets(verify_rank,
                                                                 verify_cap);
                }
            } else if (verify_identity == "theta") {
                reports.push_back(
                    check_theta(verify_rank, verify_cap, verify_workers));
            } else {
                reports.push_back(
                    check_psi(verify_rank, verify_cap, verify_workers));
            }

            if (as_json) {
                out << (reports.size() == 1 ? report_json(reports.front())
                                            : reports_json(reports))
                    << "\n";
            } else {
                for (const auto& rep : reports) out << format_report_text(rep);
            }
            const bool all_pass =
                std::all_of(reports.begin(), reports.end(),
                            [](const VerificationReport& r) { return r.pass; });
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace permstat::cli
