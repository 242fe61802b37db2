#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "support/schema_check.hpp"
#include "triwerner/checks.hpp"
#include "triwerner/io.hpp"

using namespace triwerner;
using Catch::Approx;

namespace {
nlohmann::json load_schema(const std::string& name) {
    const std::string path = std::string(TRIWERNER_SOURCE_DIR) + "/schemas/" + name;
    std::ifstream in(path);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}
}  // namespace

TEST_CASE("point serialization uses 17 significant digits", "[io]") {
    const WernerPoint p{1.0 / 3, 0, 2.0 / 3, 0, 0};
    const std::string s = werner_point_to_json_string(p);
    REQUIRE(s.find("\"r_plus\": 0.33333333333333331") != std::string::npos);
    REQUIRE(s.find("\"r1\": 0.66666666666666663") != std::string::npos);

    // roundtrip through a JSON parser recovers the doubles exactly
    const WernerPoint q = werner_point_from_json(nlohmann::json::parse(s));
    REQUIRE(q == p);

    const std::string err = schema_check::validate(nlohmann::json::parse(s),
                                                   load_schema("werner_point.schema.json"));
    REQUIRE(err.empty());
}

TEST_CASE("float formatting roundtrips", "[io]") {
    Rng rng(61);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = unit(rng);
        REQUIRE(std::stod(format_float17(x)) == x);
    }
}

TEST_CASE("classification report validates against its schema", "[io]") {
    const nlohmann::json schema = load_schema("classify_report.schema.json");
    for (const WernerPoint& p :
         {WernerPoint{0.2, 0, 0, 0, 0}, WernerPoint{0.3, 0.15, -0.3, 0, 0.28},
          WernerPoint{0.4, 0.4, 0.3, 0, 0}}) {
        const nlohmann::json report = classify_report_json(p, 3);
        const std::string err = schema_check::validate(report, schema);
        INFO(err);
        REQUIRE(err.empty());
    }
    const nlohmann::json report = classify_report_json({0.2, 0, 0, 0, 0}, 3);
    REQUIRE(report["classification"] == "biseparable");
    REQUIRE(report["valid"] == true);
}

TEST_CASE("figure 1 emitters", "[io]") {
    const int res = 5;
    const auto cells = region_map_figure1(res);

    std::ostringstream csv;
    write_figure1_csv(cells, csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    REQUIRE(header == "r_plus,r_minus,trisep,bisep_wp,bisep_projection");
    std::string first;
    std::getline(lines, first);
    // at the origin only the projection flag holds (witness at r1 = -1)
    REQUIRE(first == "0,0,0,0,1");

    const nlohmann::json j = figure1_json(cells, res);
    const std::string err = schema_check::validate(j, load_schema("region_map_figure1.schema.json"));
    INFO(err);
    REQUIRE(err.empty());
    REQUIRE(j["rows"].size() == cells.size());
}

TEST_CASE("figure 2 emitters", "[io]") {
    const int res = 5;
    const auto cells = region_map_figure2(0.27, 0.1, res);

    std::ostringstream csv;
    write_figure2_csv(cells, csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    REQUIRE(header == "r1,r2,r3,label");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    REQUIRE(rows == cells.size());

    const nlohmann::json j = figure2_json(cells, 0.27, 0.1, res);
    const std::string err = schema_check::validate(j, load_schema("region_map_figure2.schema.json"));
    INFO(err);
    REQUIRE(err.empty());

    // corner of the cube lies outside the ball
    REQUIRE(j["rows"][0]["label"] == "invalid");
}

TEST_CASE("separable decompositions serialize with interleaved components", "[io]") {
    const auto cert = certify_triseparable({10.0 / 27, 1.0 / 27, 0, 0, 0}, 2000, 3, 62);
    REQUIRE(cert.has_value());
    const nlohmann::json j = to_json(*cert);
    const std::string err =
        schema_check::validate(j, load_schema("separable_decomposition.schema.json"));
    INFO(err);
    REQUIRE(err.empty());
    REQUIRE(j["weights"].size() == j["atoms"].size());
    for (const auto& atom : j["atoms"]) {
        REQUIRE(atom["form"] == "triproduct");
        REQUIRE(atom["phi1"].size() == 6);  // three complex amplitudes, re/im interleaved
    }

    const auto bi = certify_biseparable({0, 0, -1, 0, 0}, 3000, 2, 63, Partition::one_23);
    REQUIRE(bi.has_value());
    const nlohmann::json jb = to_json(*bi);
    REQUIRE(schema_check::validate(jb, load_schema("separable_decomposition.schema.json")).empty());
    bool saw_biproduct = false;
    for (const auto& atom : jb["atoms"])
        if (atom["form"] == "biproduct") {
            saw_biproduct = true;
            REQUIRE(atom["lone"].size() == 4);
            REQUIRE(atom["pair"].size() == 8);
        }
    REQUIRE(saw_biproduct);
}

TEST_CASE("verify summary shape", "[io]") {
    VerifyConfig cfg;
    cfg.samples = 200;
    cfg.seed = 7;
    const auto results = run_suite("hyperplanes", cfg);
    const nlohmann::json summary = verify_summary_json("hyperplanes", cfg, results);
    const std::string err = schema_check::validate(summary, load_schema("verify_summary.schema.json"));
    INFO(err);
    REQUIRE(err.empty());
    REQUIRE(summary["passed"] == true);
}
