#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "nbperc/digraph.hpp"
#include "nbperc/hashimoto.hpp"

namespace fixtures {

using nbperc::Arc;
using nbperc::DiGraph;

inline DiGraph c3() { return DiGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline DiGraph chord() { return DiGraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}); }
inline DiGraph p3sym() { return DiGraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}); }
inline DiGraph star3sym() { return DiGraph(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}}); }

inline DiGraph k4sym() {
    std::vector<Arc> arcs;
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j)
            if (i != j) arcs.push_back({i, j});
    return DiGraph(4, arcs);
}

// Dense boolean adjacency of g.
inline std::vector<std::vector<int>> dense_adjacency(const DiGraph& g) {
    std::vector<std::vector<int>> a(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (const Arc& e : g.arcs()) a[e.tail][e.head] = 1;
    return a;
}

// Dense Hashimoto matrix built straight from the arc list.
inline std::vector<std::vector<int>> dense_hashimoto(const DiGraph& g) {
    const auto arcs = g.arcs();
    std::vector<std::vector<int>> h(arcs.size(), std::vector<int>(arcs.size(), 0));
    for (std::size_t u = 0; u < arcs.size(); ++u)
        for (std::size_t v = 0; v < arcs.size(); ++v)
            if (arcs[u].head == arcs[v].tail && arcs[v].head != arcs[u].tail) h[u][v] = 1;
    return h;
}

// reach[i][j] == true iff j is reachable from i (reflexive).
inline std::vector<std::vector<bool>> transitive_closure(const std::vector<std::vector<int>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        r[i][i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j]) r[i][j] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

// SCCs as a canonical set of vertex sets.
inline std::set<std::set<std::uint32_t>> scc_oracle(const std::vector<std::vector<int>>& a) {
    const auto r = transitive_closure(a);
    std::set<std::set<std::uint32_t>> out;
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        std::set<std::uint32_t> c;
        for (std::uint32_t j = 0; j < a.size(); ++j)
            if (r[i][j] && r[j][i]) c.insert(j);
        out.insert(c);
    }
    return out;
}

inline bool strongly_connected_oracle(const std::vector<std::vector<int>>& a) {
    if (a.empty()) return false;
    const auto r = transitive_closure(a);
    for (const auto& row : r)
        if (std::find(row.begin(), row.end(), false) != row.end()) return false;
    return true;
}

// Exact Tr H^s for s = 1..max_power by dense integer matrix powers.
inline std::vector<nbperc::TraceCount> dense_traces(const DiGraph& g, std::size_t max_power) {
    const auto h = dense_hashimoto(g);
    const std::size_t d = h.size();
    std::vector<std::vector<nbperc::TraceCount>> p(d, std::vector<nbperc::TraceCount>(d, 0));
    for (std::size_t i = 0; i < d; ++i) p[i][i] = 1;
    std::vector<nbperc::TraceCount> out;
    for (std::size_t s = 1; s <= max_power; ++s) {
        std::vector<std::vector<nbperc::TraceCount>> next(d, std::vector<nbperc::TraceCount>(d, 0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (p[i][k])
                    for (std::size_t j = 0; j < d; ++j)
                        if (h[k][j]) next[i][j] += p[i][k];
        p = std::move(next);
        nbperc::TraceCount t = 0;
        for (std::size_t i = 0; i < d; ++i) t += p[i][i];
        out.push_back(t);
    }
    return out;
}

// Counts closed NB walks of s arcs by enumerating vertex sequences x0..x_s=x0
// whose consecutive steps are arcs, never immediately reversing, and whose
// last step may not be the reverse of the first.
inline std::uint64_t closed_nb_walks(const DiGraph& g, std::size_t s) {
    const auto a = dense_adjacency(g);
    const std::size_t n = g.vertex_count();
    std::uint64_t count = 0;
    std::vector<std::uint32_t> walk;
    std::function<void()> extend = [&] {
        if (walk.size() == s + 1) {
            if (walk.back() != walk.front()) return;
            // wrap-around: arc walk[s-1]->walk[0] followed by walk[0]->walk[1]
            if (s >= 2 && walk[s - 1] == walk[1]) return;
            if (s == 1) return;
            ++count;
            return;
        }
        const std::uint32_t cur = walk.back();
        for (std::uint32_t next = 0; next < n; ++next) {
            if (!a[cur][next]) continue;
            if (walk.size() >= 2 && next == walk[walk.size() - 2]) continue;
            walk.push_back(next);
            extend();
            walk.pop_back();
        }
    };
    for (std::uint32_t start = 0; start < n; ++start) {
        walk = {start};
        extend();
    }
    return count;
}

// Elementary circuits by brute force: sequences starting at their minimum
// vertex, all vertices distinct, closed by an arc.
inline std::set<std::vector<std::uint32_t>> circuits_oracle(const DiGraph& g) {
    const auto a = dense_adjacency(g);
    const std::size_t n = g.vertex_count();
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> path;
    std::vector<bool> used(n, false);
    std::function<void()> extend = [&] {
        const std::uint32_t cur = path.back();
        if (path.size() >= 2 && a[cur][path.front()]) out.insert(path);
        for (std::uint32_t next = path.front() + 1; next < n; ++next) {
            if (!a[cur][next] || used[next]) continue;
            used[next] = true;
            path.push_back(next);
            extend();
            path.pop_back();
            used[next] = false;
        }
    };
    for (std::uint32_t start = 0; start < n; ++start) {
        path = {start};
        used.assign(n, false);
        used[start] = true;
        extend();
    }
    return out;
}

}  // namespace fixtures
