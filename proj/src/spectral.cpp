#include "nbperc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nbperc/error.hpp"

namespace nbperc {

std::string_view to_string(RadiusMethod method) {
    switch (method) {
        case RadiusMethod::power_shifted: return "power-shifted";
        case RadiusMethod::nilpotent_detected: return "nilpotent-detected";
        case RadiusMethod::gelfand_fallback: return "gelfand-fallback";
    }
    return "unknown";
}

namespace {

struct BlockIteration {
    double lower = 0.0;  // bracket on rho(M_block + I)
    double upper = 0.0;
    double gelfand = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> x;  // last iterate, max-normalized
};

// Power iteration on B = M + I restricted to one irreducible block.
BlockIteration iterate_shifted(const SparsePattern& block, double tol, std::size_t max_iter) {
    const std::size_t dim = block.dim;
    BlockIteration r;
    r.x.assign(dim, 1.0);
    std::vector<double> y(dim);
    double log_growth = 0.0;
    for (std::size_t k = 1; k <= max_iter; ++k) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        double top = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double s = r.x[i];
            for (std::uint32_t j : block.row(i)) s += r.x[j];
            y[i] = s;
            const double ratio = s / r.x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            top = std::max(top, s);
        }
        log_growth += std::log(top);
        r.iterations = k;
        r.lower = lo;
        r.upper = hi;
        r.gelfand = std::exp(log_growth / static_cast<double>(k));
        const double target = std::max(tol, 64 * std::numeric_limits<double>::epsilon() * hi);
        if (hi - lo <= target) {
            r.converged = true;
            return r;
        }
        for (std::size_t i = 0; i < dim; ++i) r.x[i] = y[i] / top;
    }
    return r;
}

// Rows of `op` restricted to the vertices in `members`, renumbered locally.
SparsePattern restrict_pattern(const SparsePattern& op, const std::vector<std::uint32_t>& members,
                               const std::vector<std::uint32_t>& local_id, const std::vector<std::uint32_t>& comp,
                               std::uint32_t c) {
    SparsePattern block;
    block.dim = members.size();
    block.offsets.assign(members.size() + 1, 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::uint32_t j : op.row(members[i]))
            if (comp[j] == c) block.targets.push_back(local_id[j]);
        block.offsets[i + 1] = block.targets.size();
    }
    return block;
}

std::size_t budget(const SpectralOptions& options, std::size_t dim) {
    return options.max_iter ? options.max_iter : 10 * dim + 1000;
}

}  // namespace

RadiusEstimate spectral_radius(const SparsePattern& op, const SpectralOptions& options) {
    if (!(options.tol > 0.0)) throw DomainError("spectral_radius: tol must be positive");
    RadiusEstimate est;
    if (op.dim == 0 || op.nonzeros() == 0) return est;

    const ComponentLabeling scc = strongly_connected_components(op);
    std::vector<std::vector<std::uint32_t>> members(scc.count());
    std::vector<std::uint32_t> local_id(op.dim);
    for (std::uint32_t v = 0; v < op.dim; ++v) {
        auto& m = members[scc.component_of[v]];
        local_id[v] = static_cast<std::uint32_t>(m.size());
        m.push_back(v);
    }

    bool any_cycle = false;
    bool fallback = false;
    est.lower = est.upper = est.rho = 0.0;
    for (std::uint32_t c = 0; c < scc.count(); ++c) {
        if (members[c].size() < 2) continue;  // no self-loops: singleton blocks are zero
        any_cycle = true;
        const SparsePattern block = restrict_pattern(op, members[c], local_id, scc.component_of, c);
        const BlockIteration it = iterate_shifted(block, options.tol, budget(options, block.dim));
        est.iterations += it.iterations;
        double block_rho = 0.5 * (it.lower + it.upper) - 1.0;
        if (!it.converged) {
            if (it.upper - it.lower > options.fallback_tol)
                throw NonConvergenceError("power iteration did not converge", it.lower - 1.0, it.upper - 1.0);
            fallback = true;
            block_rho = std::clamp(it.gelfand, it.lower, it.upper) - 1.0;
        }
        est.lower = std::max(est.lower, it.lower - 1.0);
        est.upper = std::max(est.upper, it.upper - 1.0);
        est.rho = std::max(est.rho, block_rho);
    }
    if (!any_cycle) return est;  // acyclic pattern: M is nilpotent
    est.method = fallback ? RadiusMethod::gelfand_fallback : RadiusMethod::power_shifted;
    est.residual = est.upper - est.lower;
    return est;
}

RadiusEstimate adjacency_spectral_radius(const DiGraph& g, const SpectralOptions& options) {
    return spectral_radius(g.adjacency_pattern(), options);
}

InducedNorms induced_norms(const HashimotoOperator& h) {
    InducedNorms n;
    for (ArcId u = 0; u < h.dimension(); ++u) {
        n.row = std::max(n.row, h.successors(u).size());
        n.col = std::max(n.col, h.predecessors(u).size());
    }
    return n;
}

PerronVector left_perron_vector(const HashimotoOperator& h, const SpectralOptions& options) {
    const std::size_t dim = h.dimension();
    if (dim == 0) throw NotStronglyConnectedError("oriented line graph is empty", 0);

    PerronVector pv;
    if (dim == 1) {
        pv.xi = {1.0};
        return pv;
    }
    const ComponentLabeling scc = strongly_connected_components(h.successor_pattern());
    if (scc.count() != 1) {
        ArcId offending = 0;
        for (ArcId u = 0; u < dim; ++u)
            if (scc.component_of[u] != scc.component_of[0]) {
                offending = u;
                break;
            }
        for (ArcId u = 0; u < dim; ++u)
            if (h.successors(u).empty() || h.predecessors(u).empty()) {
                offending = u;
                break;
            }
        const Arc& a = h.source().arc(offending);
        throw NotStronglyConnectedError("oriented line graph is not strongly connected (arc " +
                                            std::to_string(offending) + ": " + std::to_string(a.tail) + "->" +
                                            std::to_string(a.head) + ")",
                                        offending);
    }

    // Rows of H^T: (x (H + I))_v = x_v + sum over predecessors u of v.
    const BlockIteration it = iterate_shifted(h.predecessor_pattern(), options.tol, budget(options, dim));
    if (!it.converged && it.upper - it.lower > options.fallback_tol)
        throw NonConvergenceError("left Perron vector did not converge", it.lower - 1.0, it.upper - 1.0);

    pv.iterations = it.iterations;
    pv.rho = 0.5 * (it.lower + it.upper) - 1.0;
    pv.xi = it.x;
    const double total = std::accumulate(pv.xi.begin(), pv.xi.end(), 0.0);
    for (double& v : pv.xi) v /= total;
    const auto [lo, hi] = std::minmax_element(pv.xi.begin(), pv.xi.end());
    pv.gamma = *hi / *lo;

    const std::vector<double> image = nbperc::apply(h, pv.xi);
    double err = 0.0;
    for (std::size_t i = 0; i < dim; ++i) err += std::abs(image[i] - pv.rho * pv.xi[i]);
    pv.residual = err;  // ||xi||_1 == 1
    return pv;
}

SpectralReport analyze_spectrum(const HashimotoOperator& h, const SpectralOptions& options) {
    SpectralReport r;
    r.hashimoto = spectral_radius(h.successor_pattern(), options);
    r.adjacency = adjacency_spectral_radius(h.source(), options);
    r.rho_H = r.hashimoto.rho;
    r.rho_A = r.adjacency.rho;
    const InducedNorms norms = induced_norms(h);
    r.norm_row = norms.row;
    r.norm_col = norms.col;
    r.iterations = r.hashimoto.iterations + r.adjacency.iterations;
    r.residual = std::max(r.hashimoto.residual, r.adjacency.residual);
    r.method = r.hashimoto.method;

    r.olg_strongly_connected =
        h.dimension() > 0 && strongly_connected_components(h.successor_pattern()).count() == 1;
    if (r.olg_strongly_connected) {
        PerronVector pv = left_perron_vector(h, options);
        r.gamma_L = pv.gamma;
        r.left_pf = std::move(pv.xi);
    }
    return r;
}

}  // namespace nbperc
