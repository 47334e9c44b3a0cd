#include "nbperc/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "nbperc/error.hpp"
#include "nbperc/random.hpp"

namespace nbperc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

std::vector<Arc> symmetrize(const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return arcs;
}

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

DiGraph gen_cycle(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i)
        arcs.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    return DiGraph(n, std::move(arcs));
}

DiGraph gen_complete_sym(std::size_t n) {
    require(n >= 2, "complete graph needs n >= 2");
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return DiGraph(n, std::move(arcs));
}

DiGraph gen_path_sym(std::size_t n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return DiGraph(n, symmetrize(edges));
}

DiGraph gen_star_sym(std::size_t leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return DiGraph(leaves + 1, symmetrize(edges));
}

DiGraph gen_random_regular_sym(std::size_t n, std::size_t d, std::uint64_t seed) {
    require((n * d) % 2 == 0, "regular graph needs n*d even");
    require(d < n, "regular graph needs d < n");
    if (d == 0) return DiGraph(n, {});

    Rng rng(seed);
    constexpr int kRestarts = 1000;
    std::vector<VertexId> stubs;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::unordered_set<std::uint64_t> present;

    for (int attempt = 0; attempt < kRestarts; ++attempt) {
        stubs.clear();
        for (VertexId v = 0; v < n; ++v)
            for (std::size_t k = 0; k < d; ++k) stubs.push_back(v);
        edges.clear();
        present.clear();
        present.reserve(n * d);

        bool stuck = false;
        while (!stubs.empty()) {
            const std::size_t remaining = stubs.size();
            bool paired = false;
            for (std::size_t tries = 0; tries < 64 + 4 * remaining; ++tries) {
                std::size_t i = rng.below(remaining);
                std::size_t j = rng.below(remaining);
                const VertexId u = stubs[i], v = stubs[j];
                if (i == j || u == v || present.count(edge_key(u, v))) continue;
                present.insert(edge_key(u, v));
                edges.emplace_back(std::min(u, v), std::max(u, v));
                if (i < j) std::swap(i, j);
                stubs[i] = stubs.back();
                stubs.pop_back();
                stubs[j] = stubs.back();
                stubs.pop_back();
                paired = true;
                break;
            }
            if (paired) continue;
            // Exhaustive check before declaring a dead end.
            bool admissible = false;
            for (std::size_t i = 0; i < remaining && !admissible; ++i)
                for (std::size_t j = i + 1; j < remaining && !admissible; ++j)
                    admissible = stubs[i] != stubs[j] && !present.count(edge_key(stubs[i], stubs[j]));
            if (!admissible) {
                stuck = true;
                break;
            }
        }
        if (stuck) continue;

        std::sort(edges.begin(), edges.end());
        return DiGraph(n, symmetrize(edges));
    }
    throw Error("regular graph pairing failed after " + std::to_string(kRestarts) + " restarts");
}

DiGraph gen_erdos_renyi_digraph(std::size_t n, double arc_prob, std::uint64_t seed) {
    require(arc_prob >= 0.0 && arc_prob <= 1.0, "arc probability outside [0, 1]");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.uniform() < arc_prob) arcs.push_back({u, v});
        }
    return DiGraph(n, std::move(arcs));
}

DiGraph gen_random_tree_sym(std::size_t n, std::uint64_t seed) {
    require(n >= 1, "tree needs n >= 1");
    if (n == 1) return DiGraph(1, {});
    if (n == 2) return DiGraph(2, {{0, 1}, {1, 0}});

    Rng rng(seed);
    std::vector<VertexId> code(n - 2);
    for (auto& c : code) c = static_cast<VertexId>(rng.below(n));

    // Linear-time Pruefer decoding.
    std::vector<std::size_t> degree(n, 1);
    for (VertexId c : code) ++degree[c];
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    VertexId leaf = static_cast<VertexId>(ptr);
    for (VertexId c : code) {
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--degree[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = static_cast<VertexId>(ptr);
        }
    }
    edges.emplace_back(std::min<VertexId>(leaf, static_cast<VertexId>(n - 1)),
                       std::max<VertexId>(leaf, static_cast<VertexId>(n - 1)));
    return DiGraph(n, symmetrize(edges));
}

}  // namespace nbperc
