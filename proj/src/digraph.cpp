#include "nbperc/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "nbperc/detail/tarjan.hpp"
#include "nbperc/error.hpp"

namespace nbperc {

namespace {

void build_csr(std::size_t n, std::span<const Arc> arcs, bool by_tail,
               std::vector<std::size_t>& offsets, std::vector<ArcId>& ids) {
    offsets.assign(n + 1, 0);
    for (const Arc& a : arcs) ++offsets[(by_tail ? a.tail : a.head) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    ids.resize(arcs.size());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const VertexId key = by_tail ? arcs[i].tail : arcs[i].head;
        ids[fill[key]++] = static_cast<ArcId>(i);
    }
}

std::string arc_text(const Arc& a) {
    return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

}  // namespace

DiGraph::DiGraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
    if (arcs_.size() >= 0xffffffffu) throw GraphError(GraphError::Kind::vertex_out_of_range, "too many arcs");
    for (const Arc& a : arcs_) {
        if (a.tail >= n_ || a.head >= n_)
            throw GraphError(GraphError::Kind::vertex_out_of_range,
                             "arc " + arc_text(a) + " references a vertex >= " + std::to_string(n_));
        if (a.tail == a.head)
            throw GraphError(GraphError::Kind::self_loop, "self-loop at vertex " + std::to_string(a.tail));
    }
    build_csr(n_, arcs_, true, out_offsets_, out_ids_);
    build_csr(n_, arcs_, false, in_offsets_, in_ids_);

    sorted_.resize(arcs_.size());
    std::iota(sorted_.begin(), sorted_.end(), ArcId{0});
    std::sort(sorted_.begin(), sorted_.end(), [this](ArcId x, ArcId y) {
        const Arc& a = arcs_[x];
        const Arc& b = arcs_[y];
        return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
    });
    for (std::size_t i = 1; i < sorted_.size(); ++i) {
        if (arcs_[sorted_[i]] == arcs_[sorted_[i - 1]])
            throw GraphError(GraphError::Kind::duplicate_arc, "duplicate arc " + arc_text(arcs_[sorted_[i]]));
    }
}

std::optional<ArcId> DiGraph::find_arc(VertexId tail, VertexId head) const {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), Arc{tail, head}, [this](ArcId id, const Arc& key) {
        const Arc& a = arcs_[id];
        return a.tail != key.tail ? a.tail < key.tail : a.head < key.head;
    });
    if (it != sorted_.end() && arcs_[*it] == Arc{tail, head}) return *it;
    return std::nullopt;
}

SparsePattern DiGraph::adjacency_pattern() const {
    SparsePattern p;
    p.dim = n_;
    p.offsets = out_offsets_;
    p.targets.resize(out_ids_.size());
    for (std::size_t i = 0; i < out_ids_.size(); ++i) p.targets[i] = arcs_[out_ids_[i]].head;
    return p;
}

SparsePattern SparsePattern::transposed() const {
    SparsePattern t;
    t.dim = dim;
    t.offsets.assign(dim + 1, 0);
    for (std::uint32_t c : targets) ++t.offsets[c + 1];
    std::partial_sum(t.offsets.begin(), t.offsets.end(), t.offsets.begin());
    t.targets.resize(targets.size());
    std::vector<std::size_t> fill(t.offsets.begin(), t.offsets.end() - 1);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::uint32_t c : row(r)) t.targets[fill[c]++] = static_cast<std::uint32_t>(r);
    return t;
}

// ---------------------------------------------------------------------------

namespace {

bool parse_u64(std::string_view token, std::uint64_t& value) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::optional<std::uint64_t> declared_n;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.front().front() == '#') {
            if (tokens.front() == "#n") {
                std::uint64_t n = 0;
                if (tokens.size() != 2 || !parse_u64(tokens[1], n))
                    throw ParseError(line_no, "malformed '#n <N>' header");
                declared_n = n;
            }
            continue;
        }
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (tokens.size() != 2 || !parse_u64(tokens[0], u) || !parse_u64(tokens[1], v))
            throw ParseError(line_no, "expected two nonnegative integer vertex ids");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        pairs.emplace_back(u, v);
    }

    ParsedGraph result;
    std::uint64_t n = 0;
    if (options.remap_ids) {
        std::unordered_map<std::uint64_t, VertexId> ids;
        auto intern = [&](std::uint64_t x) {
            auto [it, inserted] = ids.try_emplace(x, static_cast<VertexId>(result.external_ids.size()));
            if (inserted) result.external_ids.push_back(x);
            return it->second;
        };
        for (auto& [u, v] : pairs) {
            u = intern(u);
            v = intern(v);
        }
        n = result.external_ids.size();
        if (declared_n && *declared_n < n)
            throw ParseError(0, "header declares " + std::to_string(*declared_n) + " vertices but input uses " +
                                    std::to_string(n));
        if (declared_n) n = *declared_n;
    } else {
        for (const auto& [u, v] : pairs) n = std::max({n, u + 1, v + 1});
        if (declared_n) {
            if (*declared_n < n)
                throw ParseError(0, "vertex id " + std::to_string(n - 1) + " exceeds declared count " +
                                        std::to_string(*declared_n));
            n = *declared_n;
        }
    }
    if (n > 0xfffffffeu) throw ParseError(0, "vertex count exceeds 32-bit id range");

    std::vector<Arc> arcs;
    arcs.reserve(pairs.size() * (options.undirected ? 2 : 1));
    for (const auto& [u, v] : pairs) {
        arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
        if (options.undirected) arcs.push_back({static_cast<VertexId>(v), static_cast<VertexId>(u)});
    }
    try {
        result.graph = DiGraph(static_cast<std::size_t>(n), std::move(arcs));
    } catch (const GraphError& e) {
        throw ParseError(0, e.what());
    }
    return result;
}

DiGraph parse_edge_list(std::string_view text, bool undirected) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in, ParseOptions{undirected, false}).graph;
}

DiGraph read_edge_list_file(const std::string& path, bool undirected) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_edge_list(in, ParseOptions{undirected, false}).graph;
}

void write_edge_list(std::ostream& out, const DiGraph& g) {
    out << "#n " << g.vertex_count() << '\n';
    for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::string serialize_edge_list(const DiGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

ComponentLabeling finish_labeling(detail::TarjanResult&& r) {
    ComponentLabeling lab;
    lab.component_of = std::move(r.component_of);
    lab.sizes = std::move(r.sizes);
    lab.topological_order.resize(lab.sizes.size());
    for (std::size_t i = 0; i < lab.sizes.size(); ++i)
        lab.topological_order[i] = static_cast<std::uint32_t>(lab.sizes.size() - 1 - i);
    return lab;
}

}  // namespace

ComponentLabeling strongly_connected_components(const DiGraph& g) {
    return finish_labeling(detail::tarjan(
        g.vertex_count(), [&](VertexId v) { return g.out_degree(v); },
        [&](VertexId v, std::size_t k) { return g.arc(g.out_arcs(v)[k]).head; }, [](std::size_t) { return true; }));
}

ComponentLabeling strongly_connected_components(const SparsePattern& p) {
    return finish_labeling(detail::tarjan(
        p.dim, [&](std::uint32_t v) { return p.row_size(v); },
        [&](std::uint32_t v, std::size_t k) { return p.row(v)[k]; }, [](std::size_t) { return true; }));
}

bool is_strongly_connected(const DiGraph& g) {
    return g.vertex_count() > 0 && strongly_connected_components(g).count() == 1;
}

InducedSubgraph induced_subgraph(const DiGraph& g, std::span<const std::uint8_t> open) {
    if (open.size() != g.vertex_count()) throw DimensionError("vertex mask size does not match graph order");
    InducedSubgraph out;
    std::vector<VertexId> new_id(g.vertex_count(), ComponentLabeling::kNone);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (open[v]) {
            new_id[v] = static_cast<VertexId>(out.original_id.size());
            out.original_id.push_back(static_cast<VertexId>(v));
        }
    }
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs())
        if (open[a.tail] && open[a.head]) arcs.push_back({new_id[a.tail], new_id[a.head]});
    out.graph = DiGraph(out.original_id.size(), std::move(arcs));
    return out;
}

std::vector<std::uint8_t> make_vertex_mask(std::size_t n, std::span<const VertexId> vertices) {
    std::vector<std::uint8_t> mask(n, 0);
    for (VertexId v : vertices) {
        if (v >= n) throw GraphError(GraphError::Kind::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
        mask[v] = 1;
    }
    return mask;
}

std::vector<std::pair<ArcId, ArcId>> symmetric_arc_pairs(const DiGraph& g) {
    std::vector<std::pair<ArcId, ArcId>> pairs;
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        const Arc& arc = g.arc(a);
        if (auto rev = g.find_arc(arc.head, arc.tail); rev && *rev > a) pairs.emplace_back(a, *rev);
    }
    return pairs;
}

bool is_robustly_strongly_connected(const DiGraph& g) {
    if (!is_strongly_connected(g)) return false;
    const auto bridges = strong_bridges(g);
    for (ArcId b : bridges) {
        const Arc& a = g.arc(b);
        if (g.has_arc(a.head, a.tail)) return false;
    }
    return true;
}

}  // namespace nbperc
