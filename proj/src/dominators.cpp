// Strong bridges of a strongly connected digraph.
//
// An arc u->v is a strong bridge iff it is a bridge of the flow graph rooted at
// an arbitrary vertex r, either in the graph itself or in its reversal.  In the
// flow graph G(r) the arc u->v (v != r) is a bridge iff every other
// predecessor w of v is dominated by v: the first entry into v on any r-path
// must then come through u.  Dominator trees use the Cooper-Harvey-Kennedy
// iteration.

#include <algorithm>
#include <vector>

#include "nbperc/digraph.hpp"

namespace nbperc {

namespace {

constexpr std::uint32_t kUndefined = 0xffffffffu;

struct DominatorTree {
    std::vector<std::uint32_t> pre;
    std::vector<std::uint32_t> post;

    bool dominates(std::uint32_t a, std::uint32_t b) const { return pre[a] <= pre[b] && post[b] <= post[a]; }
};

// succ/pred describe the flow graph; every vertex must be reachable from root.
template <class Succ, class Pred>
DominatorTree dominator_tree(std::size_t n, std::uint32_t root, Succ&& succ, Pred&& pred) {
    // Postorder numbering from the root.
    std::vector<std::uint32_t> order;  // vertices in postorder
    std::vector<std::uint32_t> postnum(n, kUndefined);
    {
        std::vector<std::uint8_t> seen(n, 0);
        std::vector<std::pair<std::uint32_t, std::size_t>> frames{{root, 0}};
        seen[root] = 1;
        while (!frames.empty()) {
            auto& [v, k] = frames.back();
            const auto& next = succ(v);
            if (k < next.size()) {
                const std::uint32_t w = next[k++];
                if (!seen[w]) {
                    seen[w] = 1;
                    frames.emplace_back(w, 0);
                }
                continue;
            }
            postnum[v] = static_cast<std::uint32_t>(order.size());
            order.push_back(v);
            frames.pop_back();
        }
    }

    std::vector<std::uint32_t> idom(n, kUndefined);
    idom[root] = root;
    auto intersect = [&](std::uint32_t a, std::uint32_t b) {
        while (a != b) {
            while (postnum[a] < postnum[b]) a = idom[a];
            while (postnum[b] < postnum[a]) b = idom[b];
        }
        return a;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::uint32_t v = *it;
            if (v == root) continue;
            std::uint32_t candidate = kUndefined;
            for (std::uint32_t p : pred(v)) {
                if (postnum[p] == kUndefined || idom[p] == kUndefined) continue;
                candidate = candidate == kUndefined ? p : intersect(p, candidate);
            }
            if (candidate != idom[v]) {
                idom[v] = candidate;
                changed = true;
            }
        }
    }

    std::vector<std::vector<std::uint32_t>> children(n);
    for (std::uint32_t v = 0; v < n; ++v)
        if (v != root && idom[v] != kUndefined) children[idom[v]].push_back(v);

    DominatorTree tree;
    tree.pre.assign(n, 0);
    tree.post.assign(n, 0);
    std::uint32_t clock = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> frames{{root, 0}};
    tree.pre[root] = clock++;
    while (!frames.empty()) {
        auto& [v, k] = frames.back();
        if (k < children[v].size()) {
            const std::uint32_t c = children[v][k++];
            tree.pre[c] = clock++;
            frames.emplace_back(c, 0);
            continue;
        }
        tree.post[v] = clock++;
        frames.pop_back();
    }
    return tree;
}

}  // namespace

std::vector<ArcId> strong_bridges(const DiGraph& g) {
    if (!is_strongly_connected(g) || g.vertex_count() < 2) return {};
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> out(n), in(n);
    for (const Arc& a : g.arcs()) {
        out[a.tail].push_back(a.head);
        in[a.head].push_back(a.tail);
    }
    auto out_of = [&](std::uint32_t v) -> const std::vector<std::uint32_t>& { return out[v]; };
    auto in_of = [&](std::uint32_t v) -> const std::vector<std::uint32_t>& { return in[v]; };

    const std::uint32_t root = 0;
    const DominatorTree forward = dominator_tree(n, root, out_of, in_of);
    const DominatorTree backward = dominator_tree(n, root, in_of, out_of);

    std::vector<ArcId> bridges;
    for (ArcId id = 0; id < g.arc_count(); ++id) {
        const Arc& a = g.arc(id);
        bool forward_bridge = a.head != root;
        if (forward_bridge) {
            for (VertexId w : in[a.head])
                if (w != a.tail && !forward.dominates(a.head, w)) {
                    forward_bridge = false;
                    break;
                }
        }
        bool backward_bridge = a.tail != root;
        if (backward_bridge) {
            for (VertexId w : out[a.tail])
                if (w != a.head && !backward.dominates(a.tail, w)) {
                    backward_bridge = false;
                    break;
                }
        }
        if (forward_bridge || backward_bridge) bridges.push_back(id);
    }
    return bridges;
}

}  // namespace nbperc
