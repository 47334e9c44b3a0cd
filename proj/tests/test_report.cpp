#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "nbperc/generators.hpp"
#include "nbperc/report.hpp"

using namespace nbperc;

namespace {

// name -> value for rows of one CSV section at a given p ("" for scalars)
std::map<std::string, std::string> csv_rows(const std::string& csv, const std::string& section, const std::string& p) {
    std::map<std::string, std::string> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        if (f.size() == 3) f.emplace_back();
        if (f.size() == 4 && f[0] == section && f[1] == p) out[f[2]] = f[3];
    }
    return out;
}

AnalysisDocument analyze(const DiGraph& g, std::vector<double> grid, bool cycles) {
    AnalysisOptions opts;
    opts.p_grid = std::move(grid);
    if (cycles) opts.cycles_max_len = 0;
    return analyze_graph(g, opts);
}

}  // namespace

TEST_CASE("shortest round-trip double formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    const double x = 0.13353139262452263;
    CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("input digest is stable and order independent") {
    const DiGraph a(3, {{0, 1}, {1, 2}, {2, 0}});
    const DiGraph b(3, {{2, 0}, {0, 1}, {1, 2}});
    CHECK(input_digest(a) == input_digest(b));
    CHECK(input_digest(a).rfind("fnv1a64:", 0) == 0);
    CHECK(input_digest(a) != input_digest(fixtures::chord()));
}

TEST_CASE("analysis document for C3") {
    const auto doc = analyze(fixtures::c3(), {0.5}, true);
    const auto j = to_json(doc);
    CHECK(j["spectral"]["rho_H"].get<double>() == doctest::Approx(1.0));
    CHECK(j["bounds"]["pc_spectral"].get<double>() == doctest::Approx(1.0));
    CHECK(j["graph"]["n_E"] == 3);
    CHECK(j["cycles"]["sac_total"] == 1);
    CHECK(j["bounds"]["points"][0]["expected_sac"].get<double>() == 0.125);
    CHECK(j["tool"]["version"] == kToolVersion);
}

TEST_CASE("void markers for P3sym") {
    const auto doc = analyze(parse_edge_list("0 1\n1 2", true), {0.5, 1.0}, false);
    const auto j = to_json(doc);
    CHECK(j["spectral"]["rho_H"].get<double>() == 0.0);
    CHECK(j["spectral"]["rho_H_method"] == "nilpotent-detected");
    CHECK(j["bounds"]["pc_spectral"] == "inf");
    CHECK(j["bounds"]["points"][1]["cluster_out"] == "void");
    CHECK(j["spectral"]["gamma_L"].is_null());
}

TEST_CASE("analysis JSON round-trips") {
    for (const DiGraph& g : {fixtures::k4sym(), fixtures::chord(), gen_erdos_renyi_digraph(9, 0.3, 4)}) {
        AnalysisOptions opts;
        opts.p_grid = {0.0, 0.1, 0.3, 0.6};
        opts.cycles_max_len = 0;
        opts.include_left_pf = true;
        const auto doc = analyze_graph(g, opts);
        const auto j = to_json(doc);
        const auto back = analysis_from_json(nlohmann::json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(back.spectral.rho_H == doc.spectral.rho_H);
        CHECK(back.bounds.points.size() == doc.bounds.points.size());
    }
}

TEST_CASE("CSV and JSON carry the same numbers") {
    const auto doc = analyze(fixtures::k4sym(), {0.25, 0.3, 0.7}, true);
    const auto j = to_json(doc);
    const std::string csv = to_csv(doc);
    const auto spectral = csv_rows(csv, "spectral", "");
    CHECK(std::stod(spectral.at("rho_H")) == j["spectral"]["rho_H"].get<double>());
    CHECK(std::stod(spectral.at("gamma_L")) == j["spectral"]["gamma_L"].get<double>());
    for (const auto& pj : j["bounds"]["points"]) {
        const auto rows = csv_rows(csv, "bounds", format_double(pj["p"].get<double>()));
        for (const char* key : {"cluster_out", "improved_out", "sac_closed", "sac_trace", "expected_sac"}) {
            if (pj[key].is_string())
                CHECK(rows.at(key) == pj[key].get<std::string>());
            else
                CHECK(std::stod(rows.at(key)) == pj[key].get<double>());
        }
    }
}

TEST_CASE("sweep JSON round-trips and CSV has one row per trial") {
    PercolationConfig cfg;
    cfg.p_grid = {0.2, 0.6, 1.0};
    cfg.trials = 4;
    cfg.master_seed = 9;
    const auto r = sweep(gen_random_regular_sym(40, 3, 1), cfg);
    const auto j = to_json(r);
    const auto back = sweep_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back) == j);
    for (std::size_t i = 0; i < r.points.size(); ++i) CHECK(back.points[i].trials == r.points[i].trials);

    const std::string csv = sweep_trials_csv(r);
    CHECK(csv.rfind("p,trial,largest_scc,second_scc,largest_out,largest_in,giant_count\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 12);
    const std::string summary = sweep_summary_csv(r);
    CHECK(std::count(summary.begin(), summary.end(), '\n') == 1 + 3);
}
