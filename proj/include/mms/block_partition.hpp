#pragma once

#include "mms/hypergraph.hpp"

#include <cstddef>
#include <vector>

namespace mms {

/// An ordered partition of [0, m * blocks.size()) into blocks of size m. Block i
/// stands in for vertex i of a graph being blown out. Blocks are kept sorted.
class BlockPartition {
public:
    BlockPartition() = default;
    /// Throws ValidationError unless the blocks are disjoint m-sets covering the range.
    BlockPartition(std::size_t block_size, std::vector<VertexSet> blocks);

    [[nodiscard]] std::size_t block_size() const noexcept { return m_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] std::size_t ground_size() const noexcept { return m_ * blocks_.size(); }
    [[nodiscard]] const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] const VertexSet& block(std::size_t i) const { return blocks_.at(i); }

    /// Blocks sorted, forgetting which vertex each stands for.
    [[nodiscard]] std::vector<VertexSet> as_set_partition() const;

    friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

private:
    std::size_t m_ = 1;
    std::vector<VertexSet> blocks_;
};

/// V_i = {i + j*n : 0 <= j < m}.
BlockPartition default_blowout_partition(std::size_t n, std::size_t m);

} // namespace mms
