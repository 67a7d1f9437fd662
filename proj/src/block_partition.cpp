#include "mms/block_partition.hpp"

#include "mms/errors.hpp"

#include <algorithm>
#include <string>

namespace mms {

BlockPartition::BlockPartition(std::size_t block_size, std::vector<VertexSet> blocks)
    : m_(block_size), blocks_(std::move(blocks)) {
    if (m_ == 0) throw ValidationError("partition: block size must be positive");
    const std::size_t ground = ground_size();
    std::vector<bool> seen(ground, false);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        VertexSet& b = blocks_[i];
        std::sort(b.begin(), b.end());
        const std::string where = "blocks[" + std::to_string(i) + "]";
        if (b.size() != m_) throw ValidationError(where + ": expected " + std::to_string(m_) + " elements");
        for (Vertex v : b) {
            if (v >= ground) throw ValidationError(where + ": element " + std::to_string(v) + " out of range");
            if (seen[v]) throw ValidationError(where + ": element " + std::to_string(v) + " already used");
            seen[v] = true;
        }
    }
}

std::vector<VertexSet> BlockPartition::as_set_partition() const {
    auto out = blocks_;
    std::sort(out.begin(), out.end());
    return out;
}

BlockPartition default_blowout_partition(std::size_t n, std::size_t m) {
    std::vector<VertexSet> blocks(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) blocks[i].push_back(static_cast<Vertex>(i + j * n));
    }
    return BlockPartition(m, std::move(blocks));
}

} // namespace mms
