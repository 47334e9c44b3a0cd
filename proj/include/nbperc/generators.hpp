#pragma once

#include <cstddef>
#include <cstdint>

#include "nbperc/digraph.hpp"

namespace nbperc {

/// Directed cycle 0->1->...->n-1->0.  n >= 3.
DiGraph gen_cycle(std::size_t n);
/// Complete graph with both arc directions, n >= 2.
DiGraph gen_complete_sym(std::size_t n);
/// Path 0-1-...-(n-1) with both directions, n >= 2.
DiGraph gen_path_sym(std::size_t n);
/// Center 0 joined to leaves 1..k in both directions, k >= 1.
DiGraph gen_star_sym(std::size_t leaves);

/// Random d-regular simple graph, symmetrized.  Configuration-model pairing:
/// stubs are matched at random, pairs that would create a loop or a repeated
/// edge are redrawn, and the pairing restarts when no admissible pair is
/// left.  Requires n*d even and d < n.
DiGraph gen_random_regular_sym(std::size_t n, std::size_t d, std::uint64_t seed);

/// Each ordered pair u != v is an arc independently with probability arc_prob.
DiGraph gen_erdos_renyi_digraph(std::size_t n, double arc_prob, std::uint64_t seed);

/// Uniform labeled tree on n >= 1 vertices from a random Pruefer sequence,
/// symmetrized.
DiGraph gen_random_tree_sym(std::size_t n, std::uint64_t seed);

}  // namespace nbperc
