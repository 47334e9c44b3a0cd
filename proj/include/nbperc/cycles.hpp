#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "nbperc/digraph.hpp"
#include "nbperc/hashimoto.hpp"

namespace nbperc {

struct CycleOptions {
    /// Longest circuit reported; 0 means no limit.
    std::size_t max_len = 0;
    /// Enumeration is refused above this many vertices.
    std::size_t vertex_cap = 16;
};

/// Elementary-circuit census.  Each circuit appears once, rotated so its
/// smallest vertex comes first; direction is preserved, so the two
/// orientations of a triangle are distinct circuits.
///
/// A self-avoiding cycle (SAC) is a circuit of length >= 3.  Length-2
/// circuits are back-and-forth steps that closed non-backtracking walks never
/// see, so they are listed but excluded from the SAC counts.
struct CycleReport {
    std::vector<std::vector<VertexId>> circuits;
    std::map<std::size_t, std::uint64_t> circuit_count_by_length;
    std::map<std::size_t, std::uint64_t> sac_count_by_length;

    std::uint64_t sac_total() const;
};

/// Johnson's algorithm.  CapExceededError when n > vertex_cap.
CycleReport enumerate_elementary_circuits(const DiGraph& g, const CycleOptions& options = {});

/// Expected number of SACs that survive site percolation: sum_s count_s p^s.
double expected_sac_count(const CycleReport& report, double p);

struct Rational {
    TraceCount numerator = 0;
    TraceCount denominator = 1;

    bool is_integer() const { return denominator == 1; }
    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Tr(H^s) / s in lowest terms: the number of non-backtracking cycles of
/// length s counted up to rotation.  For prime s the division must be exact;
/// a remainder there throws std::logic_error.
Rational nb_cycle_count(const HashimotoOperator& h, std::size_t s, const TraceOptions& options = {});

}  // namespace nbperc
