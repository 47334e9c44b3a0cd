#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace nbperc::detail {

inline constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

struct TarjanResult {
    /// Component per vertex; kUnvisited for inactive vertices.
    std::vector<std::uint32_t> component_of;
    std::vector<std::size_t> sizes;
};

// Iterative Tarjan.  Components are numbered in completion order, which is a
// reverse topological order of the condensation (sinks first).
// degree(v) / neighbor(v, k) enumerate successors, active(v) masks vertices.
template <class Degree, class Neighbor, class Active>
TarjanResult tarjan(std::size_t n, Degree&& degree, Neighbor&& neighbor, Active&& active) {
    TarjanResult out;
    out.component_of.assign(n, kUnvisited);
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::size_t>> frames;
    std::uint32_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited || !active(root)) continue;
        frames.emplace_back(static_cast<std::uint32_t>(root), 0);
        index[root] = low[root] = counter++;
        stack.push_back(static_cast<std::uint32_t>(root));

        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next < degree(v)) {
                const std::uint32_t w = static_cast<std::uint32_t>(neighbor(v, next++));
                if (!active(w)) continue;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    frames.emplace_back(w, 0);
                } else if (out.component_of[w] == kUnvisited) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::uint32_t finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::uint32_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
            if (low[finished] == index[finished]) {
                const auto id = static_cast<std::uint32_t>(out.sizes.size());
                std::size_t size = 0;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    out.component_of[w] = id;
                    ++size;
                } while (w != finished);
                out.sizes.push_back(size);
            }
        }
    }
    return out;
}

}  // namespace nbperc::detail
