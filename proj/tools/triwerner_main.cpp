// Command line front end: point classification, figure-data emission and the
// verification-suite runner.
//
// Exit codes: 0 success, 1 usage error, 2 invalid state, 3 verification
// failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triwerner/triwerner.hpp"

namespace {

using namespace triwerner;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidState = 2;
constexpr int kExitVerifyFailure = 3;

bool parse_point(const std::string& text, WernerPoint& out) {
    std::stringstream ss(text);
    std::array<double, 5> vals{};
    for (int k = 0; k < 5; ++k) {
        std::string item;
        if (!std::getline(ss, item, ',')) return false;
        try {
            std::size_t pos = 0;
            vals[k] = std::stod(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    std::string rest;
    if (std::getline(ss, rest, ',')) return false;
    out = WernerPoint::from_array(vals);
    return true;
}

// Writes to the path, or to stdout for "-".
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path == "-") {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return kExitUsage;
    }
    fn(os);
    return kExitOk;
}

void print_classify_text(const WernerPoint& p, int d, const Tolerances& tol, std::ostream& os) {
    const RegionLabel label = classify(p, d, tol);
    os << "point: " << werner_point_to_json_string(p) << "\n";
    os << "dimension: " << d << "\n";
    os << "valid: " << (label.valid ? "yes" : "no")
       << "  (margin " << format_float17(validity_margin(p)) << ")\n";
    os << "classification: " << classification_name(label.classification()) << "\n";
    os << "triseparable: " << (label.triseparable ? "yes" : "no")
       << "  (margin " << format_float17(triseparability_margins(p).value()) << ")\n";
    for (Partition part : all_partitions) {
        const int k = static_cast<int>(part);
        const PptSlacks s = ppt_slacks(p, part);
        os << "partition " << partition_name(part) << ": biseparable "
           << (label.biseparable[k] ? "yes" : "no") << " (margin "
           << format_float17(biseparability_margins(p, part).value()) << "), ppt "
           << (label.ppt[k] ? "yes" : "no") << " (margin "
           << format_float17(ppt_margin(p, part)) << ", s1 " << format_float17(s.s1)
           << ", s2 " << format_float17(s.s2) << ")\n";
    }
}

void print_classify_csv(const WernerPoint& p, int d, const Tolerances& tol, std::ostream& os) {
    const RegionLabel label = classify(p, d, tol);
    os << "r_plus,r_minus,r1,r2,r3,valid,classification,trisep,"
          "bisep_1_23,bisep_2_13,bisep_3_12,ppt_1_23,ppt_2_13,ppt_3_12\n";
    const auto a = p.as_array();
    for (double x : a) os << format_float17(x) << ',';
    os << int(label.valid) << ',' << classification_name(label.classification()) << ','
       << int(label.triseparable);
    for (bool b : label.biseparable) os << ',' << int(b);
    for (bool b : label.ppt) os << ',' << int(b);
    os << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for the five-parameter family of tripartite states "
                 "commuting with all U x U x U unitaries"};
    app.require_subcommand(1);

    Tolerances tol;
    app.add_option("--tol-structural", tol.structural, "Structural tolerance");
    app.add_option("--tol-spectral", tol.spectral, "Spectral tolerance");
    app.add_option("--tol-criterion", tol.criterion, "Criterion inequality slack");
    app.add_option("--tol-hull", tol.hull, "Hull feasibility / boundary band tolerance");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Classify a coordinate tuple");
    std::string point_text;
    int classify_d = 3;
    std::string classify_format = "text";
    classify_cmd->add_option("--point", point_text, "Point as r+,r-,r1,r2,r3")->required();
    classify_cmd->add_option("--d", classify_d, "Local dimension")->check(CLI::Range(2, 6));
    classify_cmd->add_option("--format", classify_format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // figure1
    auto* fig1_cmd = app.add_subcommand("figure1", "Region map over the (r+, r-) triangle");
    int fig1_resolution = 41;
    std::string fig1_format = "csv", fig1_out = "-";
    fig1_cmd->add_option("--resolution", fig1_resolution, "Grid steps per unit")->check(CLI::Range(2, 2000));
    fig1_cmd->add_option("--format", fig1_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    fig1_cmd->add_option("--out", fig1_out, "Output path ('-' for stdout)");

    // figure2
    auto* fig2_cmd = app.add_subcommand("figure2", "Region map over the Bloch ball at fixed (r+, r-)");
    double fig2_rplus = 0.27, fig2_rminus = 0.1;
    int fig2_resolution = 41, fig2_d = 3;
    std::string fig2_format = "csv", fig2_out = "-";
    fig2_cmd->add_option("--rplus", fig2_rplus, "r_+ of the fiber");
    fig2_cmd->add_option("--rminus", fig2_rminus, "r_- of the fiber");
    fig2_cmd->add_option("--resolution", fig2_resolution, "Points per axis")->check(CLI::Range(2, 401));
    fig2_cmd->add_option("--d", fig2_d, "Local dimension")->check(CLI::Range(2, 6));
    fig2_cmd->add_option("--format", fig2_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    fig2_cmd->add_option("--out", fig2_out, "Output path ('-' for stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    VerifyConfig vcfg;
    std::string suite = "all";
    std::string verify_out = "-";
    verify_cmd->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--d", vcfg.dimension, "Local dimension")->check(CLI::Range(2, 6));
    verify_cmd->add_option("--seed", vcfg.seed, "Random seed");
    verify_cmd->add_option("--samples", vcfg.samples, "Samples per scan")->check(CLI::Range(10, 10000000));
    verify_cmd->add_option("--out", verify_out, "Output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*classify_cmd) {
            WernerPoint p;
            if (!parse_point(point_text, p)) {
                std::cerr << "error: --point must be five comma-separated reals\n";
                return kExitUsage;
            }
            if (classify_format == "json")
                std::cout << classify_report_json(p, classify_d, tol).dump(2) << "\n";
            else if (classify_format == "csv")
                print_classify_csv(p, classify_d, tol, std::cout);
            else
                print_classify_text(p, classify_d, tol, std::cout);
            return is_valid_state(p, classify_d, tol) ? kExitOk : kExitInvalidState;
        }

        if (*fig1_cmd) {
            const auto cells = region_map_figure1(fig1_resolution, tol);
            return with_output(fig1_out, [&](std::ostream& os) {
                if (fig1_format == "json")
                    os << figure1_json(cells, fig1_resolution).dump(2) << "\n";
                else
                    write_figure1_csv(cells, os);
            });
        }

        if (*fig2_cmd) {
            if (fig2_rplus < 0 || fig2_rminus < 0 || fig2_rplus + fig2_rminus > 1.0) {
                std::cerr << "error: (r+, r-) must lie in the triangle r+ >= 0, r- >= 0, r+ + r- <= 1\n";
                return kExitUsage;
            }
            const auto cells = region_map_figure2(fig2_rplus, fig2_rminus, fig2_resolution, fig2_d, tol);
            return with_output(fig2_out, [&](std::ostream& os) {
                if (fig2_format == "json")
                    os << figure2_json(cells, fig2_rplus, fig2_rminus, fig2_resolution).dump(2) << "\n";
                else
                    write_figure2_csv(cells, os);
            });
        }

        if (*verify_cmd) {
            vcfg.tol = tol;
            const auto results = run_suite(suite, vcfg);
            const nlohmann::json summary = verify_summary_json(suite, vcfg, results);
            const int rc = with_output(verify_out, [&](std::ostream& os) {
                os << summary.dump(2) << "\n";
            });
            if (rc != kExitOk) return rc;
            if (!summary["passed"].get<bool>()) {
                for (const CheckResult& c : results)
                    if (!c.passed)
                        std::cerr << "FAILED: " << c.name << ": " << c.detail << "\n";
                return kExitVerifyFailure;
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
