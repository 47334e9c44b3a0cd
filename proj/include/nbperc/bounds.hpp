#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nbperc/hashimoto.hpp"
#include "nbperc/spectral.hpp"

namespace nbperc {

/// Lower bounds on the percolation threshold.  A zero denominator yields
/// +infinity: the bound never lets the graph percolate.
struct ThresholdBounds {
    double spectral = 0.0;  ///< 1 / rho(H)
    double out = 0.0;       ///< 1 / norm_row
    double in = 0.0;        ///< 1 / norm_col
};

ThresholdBounds pc_lower_bounds(const SpectralReport& report);

/// (1 - p * norm)^-1: bound on m * P_m(v), the probability that v roots a
/// cluster of at least m sites, for every m and v.  Pass norm_row for out-
/// clusters and norm_col for in-clusters.  DomainError unless p * norm < 1.
double out_component_probability_bound(double p, std::size_t norm);

/// gamma_L / (1 - p * rho_H); needs a strongly connected oriented line graph.
double improved_out_bound(double p, double rho_H, std::optional<double> gamma_L);

/// n_E * |ln(1 - p * rho_H)|: bound on the expected number of self-avoiding
/// cycles among open sites.
double sac_bound_closed(double p, double rho_H, std::size_t arc_count);

/// Truncated series together with a rigorous bound on what was dropped.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// sum_{s=1..cutoff} p^s Tr(H^s) / s with exact traces.  The tail bound uses
/// |Tr H^s| <= n_E rho^s.  Requires p * rho_H < 1 and cutoff >= n so that
/// every circuit length is covered.
SeriesValue sac_bound_trace(double p, const HashimotoOperator& h, double rho_H, std::size_t cutoff,
                            const TraceOptions& options = {});
/// Same series from precomputed traces (traces[s-1] = Tr H^s).
SeriesValue sac_bound_trace(double p, std::span<const TraceCount> traces, double rho_H, std::size_t arc_count);

/// 1 + sum_{m=1..max_len} p^m W_m(v), where W_m(v) counts non-backtracking
/// walks of m arcs leaving v.  This is the quantity whose geometric
/// majorization proves the out-cluster bound.  The tail uses
/// W_{m+1} <= norm_row W_m and requires p * norm_row < 1.
SeriesValue nb_walk_generating_sum(const HashimotoOperator& h, VertexId v, double p, std::size_t max_len);

/// One p-grid row.  Empty optionals mark bounds that are void at this p.
struct BoundsPoint {
    double p = 0.0;
    std::optional<double> cluster_out;
    std::optional<double> cluster_in;
    std::optional<double> improved_out;
    std::optional<double> sac_closed;
    std::optional<SeriesValue> sac_trace;
};

struct BoundsReport {
    ThresholdBounds pc;
    std::size_t trace_cutoff = 0;
    std::vector<BoundsPoint> points;
};

struct BoundsOptions {
    /// Series cutoff for sac_trace; raised to the vertex count if smaller.
    std::size_t trace_cutoff = 64;
    /// The trace series is skipped (left void) above this many arcs.
    TraceOptions trace;
};

BoundsReport evaluate_bounds(const SpectralReport& report, const HashimotoOperator& h, std::span<const double> p_grid,
                             const BoundsOptions& options = {});

}  // namespace nbperc
