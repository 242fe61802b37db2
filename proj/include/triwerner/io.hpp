#pragma once

// Serialization: WernerPoint JSON (17 significant digits), separable
// decompositions (weights + atom vectors as interleaved real/imag arrays),
// and the CSV / JSON region-map emitters used by the command line tool.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "triwerner/checks.hpp"
#include "triwerner/oracles.hpp"
#include "triwerner/separability.hpp"
#include "triwerner/werner.hpp"

namespace triwerner {

inline std::string format_float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// {"r_plus": ..., "r_minus": ..., "r1": ..., "r2": ..., "r3": ...} with
// 17-significant-digit decimal floats.
inline std::string werner_point_to_json_string(const WernerPoint& p) {
    return std::string("{\"r_plus\": ") + format_float17(p.r_plus) +
           ", \"r_minus\": " + format_float17(p.r_minus) +
           ", \"r1\": " + format_float17(p.r1) +
           ", \"r2\": " + format_float17(p.r2) +
           ", \"r3\": " + format_float17(p.r3) + "}";
}

inline nlohmann::json werner_point_to_json(const WernerPoint& p) {
    return {{"r_plus", p.r_plus}, {"r_minus", p.r_minus},
            {"r1", p.r1}, {"r2", p.r2}, {"r3", p.r3}};
}

inline WernerPoint werner_point_from_json(const nlohmann::json& j) {
    return {j.at("r_plus").get<double>(), j.at("r_minus").get<double>(),
            j.at("r1").get<double>(), j.at("r2").get<double>(), j.at("r3").get<double>()};
}

inline nlohmann::json to_json(const PureVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        arr.push_back(v(i).real());
        arr.push_back(v(i).imag());
    }
    return arr;
}

inline nlohmann::json to_json(const ProductState& s) {
    nlohmann::json j;
    if (std::holds_alternative<TriProduct>(s)) {
        const auto& t = std::get<TriProduct>(s);
        j["form"] = "triproduct";
        j["phi1"] = to_json(t.phi1);
        j["phi2"] = to_json(t.phi2);
        j["phi3"] = to_json(t.phi3);
    } else {
        const auto& b = std::get<BiProduct>(s);
        j["form"] = "biproduct";
        j["lone_site"] = b.lone;
        j["lone"] = to_json(b.lone_vector);
        j["pair"] = to_json(b.pair_vector);
    }
    return j;
}

inline nlohmann::json to_json(const SeparableDecomposition& d) {
    nlohmann::json j;
    j["weights"] = d.weights;
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : d.atoms) atoms.push_back(to_json(a));
    j["atoms"] = atoms;
    return j;
}

// --- Classification report ----------------------------------------------------

inline nlohmann::json classify_report_json(const WernerPoint& p, int d,
                                           const Tolerances& tol = default_tolerances()) {
    const RegionLabel label = classify(p, d, tol);
    nlohmann::json j;
    j["dimension"] = d;
    j["point"] = werner_point_to_json(p);
    j["valid"] = label.valid;
    j["classification"] = classification_name(label.classification());
    j["triseparable"] = label.triseparable;
    nlohmann::json bisep, ppt, bisep_m, ppt_m, slacks;
    for (Partition part : all_partitions) {
        const std::string name = partition_name(part);
        const int k = static_cast<int>(part);
        bisep[name] = label.biseparable[k];
        ppt[name] = label.ppt[k];
        bisep_m[name] = biseparability_margins(p, part).value();
        ppt_m[name] = ppt_margin(p, part);
        const PptSlacks s = ppt_slacks(p, part);
        slacks[name] = {{"s1", s.s1}, {"s2", s.s2}};
    }
    j["biseparable"] = bisep;
    j["ppt"] = ppt;
    j["margins"] = {{"validity", validity_margin(p)},
                    {"triseparable", triseparability_margins(p).value()},
                    {"biseparable", bisep_m},
                    {"ppt", ppt_m}};
    j["ppt_slacks"] = slacks;
    return j;
}

// --- Verification summary --------------------------------------------------------

inline nlohmann::json verify_summary_json(const std::string& suite, const VerifyConfig& cfg,
                                          const std::vector<CheckResult>& results) {
    bool all_passed = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : results) {
        all_passed = all_passed && c.passed;
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"suite", suite},   {"dimension", cfg.dimension}, {"seed", cfg.seed},
            {"samples", cfg.samples}, {"passed", all_passed}, {"checks", checks}};
}

// --- Region-map emitters --------------------------------------------------------

inline void write_figure1_csv(const std::vector<Figure1Cell>& cells, std::ostream& os) {
    os << "r_plus,r_minus,trisep,bisep_wp,bisep_projection\n";
    for (const auto& c : cells)
        os << format_float17(c.r_plus) << ',' << format_float17(c.r_minus) << ','
           << int(c.trisep) << ',' << int(c.bisep_wp) << ',' << int(c.bisep_projection) << '\n';
}

inline nlohmann::json figure1_json(const std::vector<Figure1Cell>& cells, int resolution) {
    nlohmann::json j;
    j["figure"] = "figure1";
    j["resolution"] = resolution;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : cells)
        rows.push_back({{"r_plus", c.r_plus},
                        {"r_minus", c.r_minus},
                        {"trisep", c.trisep},
                        {"bisep_wp", c.bisep_wp},
                        {"bisep_projection", c.bisep_projection}});
    j["rows"] = rows;
    return j;
}

inline void write_figure2_csv(const std::vector<Figure2Cell>& cells, std::ostream& os) {
    os << "r1,r2,r3,label\n";
    for (const auto& c : cells)
        os << format_float17(c.r1) << ',' << format_float17(c.r2) << ','
           << format_float17(c.r3) << ',' << classification_name(c.label) << '\n';
}

inline nlohmann::json figure2_json(const std::vector<Figure2Cell>& cells, double r_plus,
                                   double r_minus, int resolution) {
    nlohmann::json j;
    j["figure"] = "figure2";
    j["r_plus"] = r_plus;
    j["r_minus"] = r_minus;
    j["resolution"] = resolution;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : cells)
        rows.push_back({{"r1", c.r1},
                        {"r2", c.r2},
                        {"r3", c.r3},
                        {"label", classification_name(c.label)}});
    j["rows"] = rows;
    return j;
}

}  // namespace triwerner
