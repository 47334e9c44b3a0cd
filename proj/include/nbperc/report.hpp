#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nbperc/bounds.hpp"
#include "nbperc/cycles.hpp"
#include "nbperc/digraph.hpp"
#include "nbperc/percolation.hpp"
#include "nbperc/spectral.hpp"

namespace nbperc {

inline constexpr const char* kToolName = "nbperc";
inline constexpr const char* kToolVersion = "0.1.0";

struct GraphSummary {
    std::size_t vertex_count = 0;
    std::size_t arc_count = 0;
    std::size_t symmetric_pairs = 0;
    std::size_t scc_count = 0;
    bool strongly_connected = false;
    bool robustly_strongly_connected = false;
    bool olg_strongly_connected = false;
};

struct AnalysisOptions {
    std::vector<double> p_grid;
    /// Run the circuit census with this length limit (0 = unlimited).
    std::optional<std::size_t> cycles_max_len;
    CycleOptions cycle_limits;
    SpectralOptions spectral;
    BoundsOptions bounds;
    bool include_left_pf = false;
};

struct AnalysisDocument {
    std::string tool_version = kToolVersion;
    std::string input_digest;
    GraphSummary graph;
    SpectralReport spectral;
    BoundsReport bounds;
    std::optional<CycleReport> cycles;
    /// expected_sac[i] belongs to bounds.points[i]; present with cycles.
    std::vector<double> expected_sac;
    bool include_left_pf = false;
};

/// FNV-1a over the canonical edge list (header plus arcs sorted by
/// (tail, head)), as "fnv1a64:<16 hex digits>".
std::string input_digest(const DiGraph& g);

/// Full pipeline: structure, Hashimoto operator, spectrum, bounds, and the
/// optional circuit census.
AnalysisDocument analyze_graph(const DiGraph& g, const AnalysisOptions& options);

/// Shortest decimal that parses back to the same double; "inf"/"-inf"/"nan"
/// for non-finite values.
std::string format_double(double x);

nlohmann::json to_json(const AnalysisDocument& doc);
AnalysisDocument analysis_from_json(const nlohmann::json& j);

/// Tidy CSV, one value per row: section,p,name,value.  Scalar rows leave p
/// empty; void bounds carry the value "void".
std::string to_csv(const AnalysisDocument& doc);

// Monte-Carlo outputs.

/// p,trial,largest_scc,second_scc,largest_out,largest_in,giant_count
std::string sweep_trials_csv(const SweepResult& result);
/// p,<stat>_mean,<stat>_se for every statistic.
std::string sweep_summary_csv(const SweepResult& result);
/// root,p,m,probability,std_error
std::string out_prob_csv(const std::vector<OutProbEstimate>& estimates);

nlohmann::json to_json(const SweepResult& result);
nlohmann::json to_json(const std::vector<OutProbEstimate>& estimates);
SweepResult sweep_from_json(const nlohmann::json& j);

}  // namespace nbperc
