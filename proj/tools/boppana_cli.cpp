// boppana: certify the generalized Boppana entropy inequality, compute alpha_k
// and check the approximate k-union-closed corollary on small set systems.
//
// Exit codes: 0 success / certified, 1 falsified or violation found,
// 2 inconclusive, 3 usage or domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "boppana/alpha.hpp"
#include "boppana/io.hpp"
#include "boppana/setfamily.hpp"
#include "boppana/verifier.hpp"

namespace {

using namespace boppana;

enum ExitCode : int { kSuccess = 0, kFalsified = 1, kInconclusive = 2, kUsage = 3 };

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int run_alpha(double k, double tol, bool json) {
    const AlphaCertificate cert = solve_alpha(Exponent(k), tol);
    if (json) {
        print_json(to_json(cert));
    } else {
        std::cout << "k = " << format_double(k) << '\n'
                  << "alpha in [" << format_double(cert.enclosure.lo()) << ", "
                  << format_double(cert.enclosure.hi()) << "]\n"
                  << "width = " << format_double(cert.width) << '\n'
                  << "iterations = " << cert.iterations << '\n'
                  << "status = " << to_string(cert.status) << '\n';
    }
    return cert.width <= tol ? kSuccess : kInconclusive;
}

int run_verify(double k, const CertifyOptions& options, bool json) {
    const VerificationReport report = certify(Exponent(k), options);
    if (json) {
        print_json(to_json(report));
    } else {
        std::size_t certified = 0;
        for (const RegionStatus& r : report.regions) {
            certified += r.status == Status::certified_positive;
        }
        std::cout << "k = " << format_double(k) << '\n'
                  << "alpha in [" << format_double(report.alpha.enclosure.lo()) << ", "
                  << format_double(report.alpha.enclosure.hi()) << "]\n"
                  << "equality point in [" << format_double(report.equality_point.lo()) << ", "
                  << format_double(report.equality_point.hi()) << "]\n"
                  << "regions = " << report.regions.size() << " (" << certified << " certified positive)\n"
                  << "deepest split = " << report.deepest_split << '\n'
                  << "min certified margin = "
                  << (report.min_certified_margin ? format_double(*report.min_certified_margin) : "none") << '\n';
        for (const RegionStatus& r : report.regions) {
            if (r.kind != RegionKind::core || r.status != Status::certified_positive) {
                std::cout << "  [" << format_double(r.region.lo()) << ", " << format_double(r.region.hi())
                          << "] " << to_string(r.kind) << ' ' << to_string(r.status)
                          << " margin=" << format_double(r.margin) << '\n';
            }
        }
        std::cout << "overall = " << to_string(report.overall) << '\n';
    }
    switch (report.overall) {
        case Overall::certified:
        case Overall::certified_except_zones:
            return kSuccess;
        case Overall::falsified:
            return kFalsified;
        case Overall::inconclusive:
            return kInconclusive;
    }
    return kInconclusive;
}

int run_scan(double k, int grid, const std::string& out_path) {
    const auto rows = scan(Exponent(k), grid);
    if (out_path.empty()) {
        write_scan_csv(std::cout, rows);
        return kSuccess;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw DomainError("cannot open '" + out_path + "' for writing");
    }
    write_scan_csv(out, rows);
    out.close();
    if (!out) {
        throw DomainError("failed writing '" + out_path + "'");
    }
    std::cout << "rows = " << rows.size() << '\n';
    return kSuccess;
}

int run_check(const std::string& path, int k, bool json) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open family file '" + path + "'");
    }
    const SetFamily family = read_family(in);
    const ClosureStats stats = closure_stats(family, k, solve_alpha(Exponent(k)));
    if (json) {
        print_json(to_json(stats));
    } else {
        std::cout << "n = " << family.n() << ", |F| = " << family.size() << ", k = " << k << '\n'
                  << "union closed = " << (is_union_closed(family) ? "true" : "false") << '\n'
                  << "c = " << stats.c.str() << " (" << format_double(stats.c.value()) << ")\n"
                  << "epsilon = " << stats.epsilon.str() << '\n'
                  << "max_freq = " << stats.max_freq.frequency.str() << " ("
                  << format_double(stats.max_freq.frequency.value()) << ") at element " << stats.max_freq.element
                  << '\n'
                  << "bound = " << (stats.bound ? format_double(stats.bound->reported) : "undefined (epsilon >= 1/2)")
                  << '\n'
                  << "satisfied = " << (stats.satisfied ? "true" : "false") << '\n';
    }
    return stats.satisfied ? kSuccess : kFalsified;
}

int report_search(const SearchReport& report, bool json) {
    if (json) {
        print_json(to_json(report));
    } else {
        std::cout << "n = " << report.n << ", k = " << report.k << " (" << kTupleConvention << " tuples)\n"
                  << "families_checked = " << report.families_checked << '\n'
                  << "families_bounded = " << report.families_bounded << '\n';
        if (report.families_skipped > 0) {
            std::cout << "families_skipped = " << report.families_skipped << " (over the 1e9 tuple guard)\n";
        }
        std::cout << "violations = " << report.violations.size() << '\n'
                  << "min_slack = " << (report.min_slack ? format_double(*report.min_slack) : "none") << '\n';
        if (report.union_closed_min_max_freq) {
            std::cout << "union_closed_families = " << report.union_closed_families
                      << ", min max_freq = " << report.union_closed_min_max_freq->str() << '\n';
        }
        for (const Violation& v : report.violations) {
            std::cout << "  violation id=" << v.id << " max_freq=" << v.max_freq.str()
                      << " bound=" << format_double(v.bound) << '\n';
        }
    }
    return report.violations.empty() ? kSuccess : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certify alpha_k h(x^k) >= x^(k-1) h(x) and related quantities"};
    app.require_subcommand(1);

    double k = 2.0;
    double tol = kDefaultAlphaTol;
    bool json = false;
    int workers = 1;

    auto* alpha_cmd = app.add_subcommand("alpha", "Certified enclosure of alpha_k");
    alpha_cmd->add_option("--k", k, "Exponent k > 1")->required();
    alpha_cmd->add_option("--tol", tol, "Target enclosure width (>= 1e-14)");
    alpha_cmd->add_flag("--json", json, "Emit JSON");

    CertifyOptions certify_options;
    auto* verify_cmd = app.add_subcommand("verify", "Branch-and-bound certification of the inequality");
    verify_cmd->add_option("--k", k, "Exponent k > 1")->required();
    verify_cmd->add_option("--exclusion", certify_options.exclusion_radius, "Zone radius in [1e-6, 1e-2]");
    verify_cmd->add_option("--depth", certify_options.max_depth, "Maximum bisection depth (1..60)");
    verify_cmd->add_option("--tol", certify_options.tol, "Alpha enclosure width");
    verify_cmd->add_option("--workers", workers, "Worker threads");
    verify_cmd->add_flag("--json", json, "Emit JSON");
    verify_cmd->add_option("--test-defect-shift", certify_options.defect_shift,
                           "Testing only: certify D(x) minus this constant");

    int grid = 1001;
    std::string out_path;
    auto* scan_cmd = app.add_subcommand("scan", "Tabulate x, q, D, U(x)-U(x^k) as CSV");
    scan_cmd->add_option("--k", k, "Exponent k > 1")->required();
    scan_cmd->add_option("--grid", grid, "Number of grid points (>= 2)");
    scan_cmd->add_option("--out", out_path, "Output CSV path (default: standard output)");

    auto* ucs_cmd = app.add_subcommand("ucs", "Approximate k-union-closed corollary checks");
    ucs_cmd->require_subcommand(1);
    int kk = 2;
    int n = 3;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string family_path;

    auto* check_cmd = ucs_cmd->add_subcommand("check", "Closure statistics of one family");
    check_cmd->add_option("--family", family_path, "Family file")->required();
    check_cmd->add_option("--k", kk, "Integer k >= 2");
    check_cmd->add_flag("--json", json, "Emit JSON");

    auto* exhaustive_cmd = ucs_cmd->add_subcommand("exhaustive", "All families over [n], n <= 4");
    exhaustive_cmd->add_option("--n", n, "Ground-set size")->required();
    exhaustive_cmd->add_option("--k", kk, "Integer k >= 2");
    exhaustive_cmd->add_option("--workers", workers, "Worker threads");
    exhaustive_cmd->add_flag("--json", json, "Emit JSON");

    auto* probe_cmd = ucs_cmd->add_subcommand("probe", "Random families over [n], n <= 16");
    probe_cmd->add_option("--n", n, "Ground-set size")->required();
    probe_cmd->add_option("--k", kk, "Integer k >= 2");
    probe_cmd->add_option("--trials", trials, "Number of random families");
    probe_cmd->add_option("--seed", seed, "PRNG seed");
    probe_cmd->add_option("--workers", workers, "Worker threads");
    probe_cmd->add_flag("--json", json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*alpha_cmd) {
            return run_alpha(k, tol, json);
        }
        if (*verify_cmd) {
            certify_options.workers = workers;
            return run_verify(k, certify_options, json);
        }
        if (*scan_cmd) {
            return run_scan(k, grid, out_path);
        }
        if (*check_cmd) {
            return run_check(family_path, kk, json);
        }
        if (*exhaustive_cmd) {
            return report_search(exhaustive_check(n, kk, workers), json);
        }
        if (*probe_cmd) {
            return report_search(random_probe(n, kk, trials, seed, workers), json);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CertificationError& e) {
        std::cerr << "certification error: " << e.what() << '\n';
        return kInconclusive;
    }
    return kUsage;
}
