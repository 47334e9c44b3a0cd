#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nbperc/sparse_pattern.hpp"

namespace nbperc {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable simple digraph on vertices 0..n-1.
///
/// Arc ids follow insertion order.  Adjacency lists are stored in CSR form and
/// list arc ids in ascending order.  Construction rejects self-loops, parallel
/// arcs and out-of-range endpoints with GraphError.
class DiGraph {
public:
    DiGraph() = default;
    DiGraph(std::size_t vertex_count, std::vector<Arc> arcs);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    std::span<const Arc> arcs() const noexcept { return arcs_; }
    const Arc& arc(ArcId a) const { return arcs_[a]; }

    std::span<const ArcId> out_arcs(VertexId v) const {
        return {out_ids_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
    }
    std::span<const ArcId> in_arcs(VertexId v) const {
        return {in_ids_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
    }
    std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    /// Arc id of tail->head, if present.  O(log n_E).
    std::optional<ArcId> find_arc(VertexId tail, VertexId head) const;
    bool has_arc(VertexId tail, VertexId head) const { return find_arc(tail, head).has_value(); }

    /// Adjacency matrix A(D) as a 0/1 pattern (row = tail, column = head).
    SparsePattern adjacency_pattern() const;

    friend bool operator==(const DiGraph& a, const DiGraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<ArcId> out_ids_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<ArcId> in_ids_;
    std::vector<ArcId> sorted_;  // arc ids ordered by (tail, head)
};

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # comment
//   #n 5          optional: fixes the vertex count
//   0 1           one arc per line, tail then head
//
// Without a header the vertex count is 1 + max id.

struct ParseOptions {
    /// Each line u v yields both u->v and v->u.
    bool undirected = false;
    /// Map arbitrary external ids onto 0..n-1 in order of first appearance.
    bool remap_ids = false;
};

struct ParsedGraph {
    DiGraph graph;
    /// external_ids[v] is the id vertex v carried in the input; empty when
    /// ids were used as-is.
    std::vector<std::uint64_t> external_ids;
};

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
DiGraph parse_edge_list(std::string_view text, bool undirected = false);
DiGraph read_edge_list_file(const std::string& path, bool undirected = false);

/// Writes the "#n" header and one line per arc in arc-id order.
std::string serialize_edge_list(const DiGraph& g);
void write_edge_list(std::ostream& out, const DiGraph& g);

// ---------------------------------------------------------------------------
// Components

struct ComponentLabeling {
    static constexpr std::uint32_t kNone = 0xffffffffu;

    /// Component per vertex (kNone for vertices excluded by a mask).
    std::vector<std::uint32_t> component_of;
    std::vector<std::size_t> sizes;
    /// Component ids in topological order of the condensation, sources first.
    std::vector<std::uint32_t> topological_order;

    std::size_t count() const noexcept { return sizes.size(); }
};

ComponentLabeling strongly_connected_components(const DiGraph& g);
ComponentLabeling strongly_connected_components(const SparsePattern& pattern);
bool is_strongly_connected(const DiGraph& g);

struct InducedSubgraph {
    DiGraph graph;
    /// original_id[new vertex] = vertex id in the parent graph.
    std::vector<VertexId> original_id;
};

/// Subgraph induced by the vertices with open[v] != 0.  Retained vertices are
/// renumbered densely in ascending original order; arcs keep their relative order.
InducedSubgraph induced_subgraph(const DiGraph& g, std::span<const std::uint8_t> open);
std::vector<std::uint8_t> make_vertex_mask(std::size_t n, std::span<const VertexId> vertices);

/// Every pair {u->v, v->u}, reported once as (lower arc id, higher arc id).
std::vector<std::pair<ArcId, ArcId>> symmetric_arc_pairs(const DiGraph& g);

/// Arcs whose removal breaks strong connectivity.  Empty if g is not strongly
/// connected to begin with.
std::vector<ArcId> strong_bridges(const DiGraph& g);

/// Strongly connected, and stays so after deleting any single member of any
/// symmetric pair.  This is the condition under which the oriented line graph
/// inherits strong connectivity.
bool is_robustly_strongly_connected(const DiGraph& g);

}  // namespace nbperc
