#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nbperc/digraph.hpp"
#include "nbperc/random.hpp"

namespace nbperc {

enum class ComponentKind { scc, out, in };

std::string_view to_string(ComponentKind kind);

struct PercolationConfig {
    std::vector<double> p_grid;
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    /// A component is "giant" when its size exceeds giant_fraction * n.
    double giant_fraction = 0.01;
    /// Coupled sweep: one uniform draw per vertex and trial, shared by every
    /// grid point, so open sets are nested in p.  Otherwise each (p, trial)
    /// draws its own stream.
    bool coupled = true;
    /// 0 selects worker_count().
    std::size_t threads = 0;

    void validate() const;
};

/// Component statistics of one open subgraph.
struct ComponentStats {
    std::size_t open_count = 0;
    std::size_t largest_scc = 0;
    std::size_t second_scc = 0;
    std::size_t largest_out = 0;
    std::size_t largest_in = 0;
    /// Strongly connected components with more than giant_fraction * n sites.
    std::size_t giant_count = 0;

    friend bool operator==(const ComponentStats&, const ComponentStats&) = default;
};

/// Open-site mask: vertex v is open when its uniform draw is below p.
std::vector<std::uint8_t> sample_open_set(std::size_t n, double p, Rng& rng);

/// Statistics of an already-induced open subgraph.  reference_n is the order
/// of the parent graph, used for the giant threshold (0: use g_open's order).
ComponentStats measure_components(const DiGraph& g_open, double giant_fraction, std::size_t reference_n = 0);

/// Same statistics computed in place on g restricted to the open mask.
ComponentStats measure_open_components(const DiGraph& g, std::span<const std::uint8_t> open, double giant_fraction);

struct Summary {
    double mean = 0.0;
    double std_error = 0.0;
};

struct SweepPoint {
    double p = 0.0;
    std::vector<ComponentStats> trials;
    Summary largest_scc;
    Summary second_scc;
    Summary largest_out;
    Summary largest_in;
    Summary giant_count;
};

struct SweepResult {
    std::size_t vertex_count = 0;
    double giant_fraction = 0.01;
    bool coupled = true;
    std::uint64_t master_seed = 0;
    std::vector<SweepPoint> points;
};

/// trials x p_grid measurements.  Bit-identical for a fixed config whatever
/// the worker count.
SweepResult sweep(const DiGraph& g, const PercolationConfig& config);

/// P_m(v) = Pr[v open and at least m sites reachable from v in the open
/// subgraph, v included], for m = 1..m_max.
struct OutProbEstimate {
    VertexId root = 0;
    double p = 0.0;
    std::size_t trials = 0;
    std::vector<double> probability;  ///< index m-1
    std::vector<double> std_error;    ///< binomial standard error, index m-1

    double at(std::size_t m) const { return probability.at(m - 1); }
    double se(std::size_t m) const { return std_error.at(m - 1); }
};

/// One estimate per root.  All roots share the same open sets per trial.
std::vector<OutProbEstimate> estimate_out_prob(const DiGraph& g, std::span<const VertexId> roots, double p,
                                               std::size_t m_max, std::size_t trials, std::uint64_t seed,
                                               std::size_t threads = 0);
OutProbEstimate estimate_out_prob(const DiGraph& g, VertexId root, double p, std::size_t m_max, std::size_t trials,
                                  std::uint64_t seed, std::size_t threads = 0);

enum class ThresholdCriterion { giant_fraction_crossing, susceptibility_peak };

struct ThresholdEstimate {
    double p_c = 0.0;
    double uncertainty = 0.0;
};

/// giant_fraction_crossing: linear interpolation where the mean largest
/// component fraction first crosses giant_fraction.  susceptibility_peak:
/// argmax of the mean second-largest SCC, refined by a parabola through the
/// neighboring grid points.  DomainError when there is no crossing or peak.
ThresholdEstimate estimate_threshold(const SweepResult& result, ThresholdCriterion criterion,
                                     ComponentKind target = ComponentKind::scc);

struct MultiplicityPoint {
    double p = 0.0;
    /// second-largest / largest SCC per trial (0 when nothing is open).
    std::vector<double> ratios;
    std::vector<std::size_t> giant_counts;
    std::vector<std::size_t> largest_scc;
    double mean_ratio = 0.0;
    /// Fraction of trials with two or more giant components.
    double multi_giant_fraction = 0.0;
};

/// Observational probe of cluster multiplicity across a p grid.
std::vector<MultiplicityPoint> multiplicity_probe(const DiGraph& g, const PercolationConfig& config);

}  // namespace nbperc
