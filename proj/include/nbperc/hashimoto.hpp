#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nbperc/digraph.hpp"
#include "nbperc/sparse_pattern.hpp"

namespace nbperc {

/// Exact walk counts.  Closed non-backtracking walk counts grow like rho^s,
/// so 64 bits run out early on dense graphs; 128 bits cover s = 64 for
/// rho(H) < 4.
using TraceCount = unsigned __int128;

std::string to_string(TraceCount value);

/// Non-backtracking (Hashimoto) operator on the arcs of a simple digraph.
///
/// Entry (u, v) is 1 iff v follows u: for u = i->j and v = j'->l this means
/// j == j' and l != i.  Row u of the successor pattern lists the arcs that may
/// follow u, in ascending arc id.  The operator keeps a pointer to the source
/// graph, which must outlive it.
class HashimotoOperator {
public:
    explicit HashimotoOperator(const DiGraph& g);

    std::size_t dimension() const noexcept { return successors_.dim; }
    const DiGraph& source() const noexcept { return *graph_; }

    std::span<const std::uint32_t> successors(ArcId u) const { return successors_.row(u); }
    std::span<const std::uint32_t> predecessors(ArcId v) const { return predecessors_.row(v); }

    /// Number of ones in H.
    std::size_t stored_pairs() const noexcept { return successors_.nonzeros(); }

    /// H itself (row u = successors of u).
    const SparsePattern& successor_pattern() const noexcept { return successors_; }
    /// H^T (row v = predecessors of v).
    const SparsePattern& predecessor_pattern() const noexcept { return predecessors_; }

private:
    const DiGraph* graph_;
    SparsePattern successors_;
    SparsePattern predecessors_;
};

HashimotoOperator build_hashimoto(const DiGraph& g);

/// Oriented line graph: one vertex per arc of g (same ids), one arc u->v per
/// non-backtracking succession.  Its adjacency matrix is H.
DiGraph build_olg(const DiGraph& g);

/// y = x H, i.e. y_v = sum of x_u over the arcs u that v follows.  Mass moves
/// forward along non-backtracking steps.
std::vector<double> apply(const HashimotoOperator& h, std::span<const double> x);
/// y = H x, i.e. y_u = sum of x_v over the successors v of u.
std::vector<double> apply_transpose(const HashimotoOperator& h, std::span<const double> x);

struct TraceOptions {
    /// Exact traces are refused above this many arcs.
    std::size_t arc_cap = 5000;
    /// 0 selects worker_count().
    std::size_t threads = 0;
};

/// Tr H^s: the number of closed non-backtracking walks of length s.
TraceCount trace_power(const HashimotoOperator& h, std::size_t s, const TraceOptions& options = {});

/// {Tr H^1, ..., Tr H^max_power} from a single propagation per basis vector.
std::vector<TraceCount> trace_powers(const HashimotoOperator& h, std::size_t max_power,
                                     const TraceOptions& options = {});

}  // namespace nbperc
