#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nbperc {

/// 0/1 square matrix in compressed-row form: row i has ones in the columns
/// targets[offsets[i] .. offsets[i+1]).  Both A(D) and the Hashimoto matrix
/// are stored this way.
struct SparsePattern {
    std::size_t dim = 0;
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> targets;

    std::span<const std::uint32_t> row(std::size_t i) const {
        return {targets.data() + offsets[i], offsets[i + 1] - offsets[i]};
    }
    std::size_t row_size(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
    std::size_t nonzeros() const { return targets.size(); }

    /// Pattern of the transposed matrix; rows keep ascending column order.
    SparsePattern transposed() const;
};

}  // namespace nbperc
