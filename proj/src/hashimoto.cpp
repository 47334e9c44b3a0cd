#include "nbperc/hashimoto.hpp"

#include <algorithm>

#include "nbperc/error.hpp"
#include "nbperc/parallel.hpp"

namespace nbperc {

std::string to_string(TraceCount value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

HashimotoOperator::HashimotoOperator(const DiGraph& g) : graph_(&g) {
    successors_.dim = g.arc_count();
    successors_.offsets.assign(g.arc_count() + 1, 0);
    for (ArcId u = 0; u < g.arc_count(); ++u) {
        const Arc& a = g.arc(u);
        for (ArcId v : g.out_arcs(a.head))
            if (g.arc(v).head != a.tail) successors_.targets.push_back(v);
        successors_.offsets[u + 1] = successors_.targets.size();
    }
    predecessors_ = successors_.transposed();
}

HashimotoOperator build_hashimoto(const DiGraph& g) { return HashimotoOperator(g); }

DiGraph build_olg(const DiGraph& g) {
    const HashimotoOperator h(g);
    std::vector<Arc> arcs;
    arcs.reserve(h.stored_pairs());
    for (ArcId u = 0; u < h.dimension(); ++u)
        for (std::uint32_t v : h.successors(u)) arcs.push_back({u, v});
    return DiGraph(g.arc_count(), std::move(arcs));
}

std::vector<double> apply(const HashimotoOperator& h, std::span<const double> x) {
    if (x.size() != h.dimension())
        throw DimensionError("apply: vector length " + std::to_string(x.size()) + " != n_E " +
                             std::to_string(h.dimension()));
    std::vector<double> y(h.dimension(), 0.0);
    for (std::size_t v = 0; v < y.size(); ++v) {
        double sum = 0.0;
        for (std::uint32_t u : h.predecessors(static_cast<ArcId>(v))) sum += x[u];
        y[v] = sum;
    }
    return y;
}

std::vector<double> apply_transpose(const HashimotoOperator& h, std::span<const double> x) {
    if (x.size() != h.dimension())
        throw DimensionError("apply_transpose: vector length " + std::to_string(x.size()) + " != n_E " +
                             std::to_string(h.dimension()));
    std::vector<double> y(h.dimension(), 0.0);
    for (std::size_t u = 0; u < y.size(); ++u) {
        double sum = 0.0;
        for (std::uint32_t v : h.successors(static_cast<ArcId>(u))) sum += x[v];
        y[u] = sum;
    }
    return y;
}

std::vector<TraceCount> trace_powers(const HashimotoOperator& h, std::size_t max_power, const TraceOptions& options) {
    const std::size_t dim = h.dimension();
    if (dim > options.arc_cap)
        throw CapExceededError("exact trace needs n_E <= " + std::to_string(options.arc_cap) + ", got " +
                               std::to_string(dim));
    if (max_power == 0) return {};

    // diagonal[u][s-1] = (H^s)_{uu}, from walks started at the basis vector e_u.
    std::vector<std::vector<TraceCount>> diagonal(dim);
    parallel_for(dim, worker_count(options.threads), [&](std::size_t start) {
        std::vector<TraceCount> current(dim, 0), next(dim, 0);
        std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(start)}, next_frontier;
        std::vector<std::uint8_t> in_next(dim, 0);
        current[start] = 1;
        auto& diag = diagonal[start];
        diag.assign(max_power, 0);
        for (std::size_t s = 1; s <= max_power && !frontier.empty(); ++s) {
            for (std::uint32_t u : frontier) {
                const TraceCount c = current[u];
                for (std::uint32_t v : h.successors(u)) {
                    if (__builtin_add_overflow(next[v], c, &next[v])) throw OverflowError(s);
                    if (!in_next[v]) {
                        in_next[v] = 1;
                        next_frontier.push_back(v);
                    }
                }
                current[u] = 0;
            }
            diag[s - 1] = next[start];
            std::swap(current, next);
            std::swap(frontier, next_frontier);
            next_frontier.clear();
            for (std::uint32_t v : frontier) in_next[v] = 0;
        }
    });

    std::vector<TraceCount> traces(max_power, 0);
    for (std::size_t s = 0; s < max_power; ++s)
        for (std::size_t u = 0; u < dim; ++u)
            if (__builtin_add_overflow(traces[s], diagonal[u][s], &traces[s])) throw OverflowError(s + 1);
    return traces;
}

TraceCount trace_power(const HashimotoOperator& h, std::size_t s, const TraceOptions& options) {
    if (s == 0) throw DomainError("trace_power: s must be positive");
    return trace_powers(h, s, options).back();
}

}  // namespace nbperc
