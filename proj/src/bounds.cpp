#include "nbperc/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nbperc/error.hpp"

namespace nbperc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double reciprocal(double x) { return x > 0.0 ? 1.0 / x : kInf; }

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability " + std::to_string(p) + " outside [0, 1]");
}

}  // namespace

ThresholdBounds pc_lower_bounds(const SpectralReport& report) {
    return {reciprocal(report.rho_H), reciprocal(static_cast<double>(report.norm_row)),
            reciprocal(static_cast<double>(report.norm_col))};
}

double out_component_probability_bound(double p, std::size_t norm) {
    check_probability(p);
    const double x = p * static_cast<double>(norm);
    if (x >= 1.0) throw DomainError("cluster bound void: p * norm = " + std::to_string(x) + " >= 1");
    return 1.0 / (1.0 - x);
}

double improved_out_bound(double p, double rho_H, std::optional<double> gamma_L) {
    check_probability(p);
    if (!gamma_L) throw DomainError("improved bound needs gamma_L (oriented line graph not strongly connected)");
    const double x = p * rho_H;
    if (x >= 1.0) throw DomainError("improved bound void: p * rho(H) = " + std::to_string(x) + " >= 1");
    return *gamma_L / (1.0 - x);
}

double sac_bound_closed(double p, double rho_H, std::size_t arc_count) {
    check_probability(p);
    const double x = p * rho_H;
    if (x >= 1.0) throw DomainError("cycle bound void: p * rho(H) = " + std::to_string(x) + " >= 1");
    return static_cast<double>(arc_count) * std::abs(std::log1p(-x));
}

SeriesValue sac_bound_trace(double p, std::span<const TraceCount> traces, double rho_H, std::size_t arc_count) {
    check_probability(p);
    const double x = p * rho_H;
    if (x >= 1.0) throw DomainError("cycle bound void: p * rho(H) = " + std::to_string(x) + " >= 1");
    SeriesValue r;
    double power = 1.0;
    for (std::size_t s = 1; s <= traces.size(); ++s) {
        power *= p;
        if (traces[s - 1] != 0)
            r.value += power * static_cast<double>(traces[s - 1]) / static_cast<double>(s);
    }
    // sum_{s>S} n_E x^s / s <= n_E x^(S+1) / ((S+1)(1-x))
    const double cutoff = static_cast<double>(traces.size());
    r.tail_bound = x > 0.0 ? static_cast<double>(arc_count) * std::pow(x, cutoff + 1) / ((cutoff + 1) * (1.0 - x)) : 0.0;
    return r;
}

SeriesValue sac_bound_trace(double p, const HashimotoOperator& h, double rho_H, std::size_t cutoff,
                            const TraceOptions& options) {
    if (cutoff < h.source().vertex_count())
        throw DomainError("trace cutoff " + std::to_string(cutoff) + " is below the vertex count " +
                          std::to_string(h.source().vertex_count()));
    check_probability(p);
    if (p * rho_H >= 1.0) throw DomainError("cycle bound void: p * rho(H) >= 1");
    const auto traces = trace_powers(h, cutoff, options);
    return sac_bound_trace(p, traces, rho_H, h.dimension());
}

SeriesValue nb_walk_generating_sum(const HashimotoOperator& h, VertexId v, double p, std::size_t max_len) {
    check_probability(p);
    const DiGraph& g = h.source();
    if (v >= g.vertex_count()) throw DomainError("root vertex " + std::to_string(v) + " out of range");
    const std::size_t norm = induced_norms(h).row;
    const double ratio = p * static_cast<double>(norm);
    if (ratio >= 1.0) throw DomainError("walk series void: p * norm_row >= 1");

    SeriesValue r;
    r.value = 1.0;
    std::vector<double> walks(h.dimension(), 0.0);
    for (ArcId a : g.out_arcs(v)) walks[a] = 1.0;
    double count = static_cast<double>(g.out_degree(v));  // W_1
    double power = 1.0;
    for (std::size_t m = 1; m <= max_len; ++m) {
        power *= p;
        r.value += power * count;
        if (m == max_len || count == 0.0) break;
        walks = nbperc::apply(h, walks);
        count = 0.0;
        for (double w : walks) count += w;
    }
    if (max_len == 0) {
        r.tail_bound = p * count / (1.0 - ratio);
    } else if (count > 0.0) {
        // count holds W_max_len here; W_{m+1} <= norm_row W_m
        r.tail_bound = power * count * ratio / (1.0 - ratio);
    }
    return r;
}

BoundsReport evaluate_bounds(const SpectralReport& report, const HashimotoOperator& h, std::span<const double> p_grid,
                             const BoundsOptions& options) {
    BoundsReport out;
    out.pc = pc_lower_bounds(report);
    out.trace_cutoff = std::max(options.trace_cutoff, h.source().vertex_count());

    std::optional<std::vector<TraceCount>> traces;
    if (h.dimension() <= options.trace.arc_cap) {
        try {
            traces = trace_powers(h, out.trace_cutoff, options.trace);
        } catch (const OverflowError&) {
            traces.reset();
        }
    }

    for (double p : p_grid) {
        check_probability(p);
        BoundsPoint pt;
        pt.p = p;
        if (p * static_cast<double>(report.norm_row) < 1.0) pt.cluster_out = out_component_probability_bound(p, report.norm_row);
        if (p * static_cast<double>(report.norm_col) < 1.0) pt.cluster_in = out_component_probability_bound(p, report.norm_col);
        if (p * report.rho_H < 1.0) {
            if (report.gamma_L) pt.improved_out = improved_out_bound(p, report.rho_H, report.gamma_L);
            pt.sac_closed = sac_bound_closed(p, report.rho_H, h.dimension());
            if (traces) pt.sac_trace = sac_bound_trace(p, *traces, report.rho_H, h.dimension());
        }
        out.points.push_back(pt);
    }
    return out;
}

}  // namespace nbperc
