#pragma once

#include "mms/block_partition.hpp"
#include "mms/hypergraph.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace mms {

struct PartitionFamily;

/// H^{⊕m}: vertex i becomes the block V_i of `partition` (default i + j*n) and
/// each edge the union of its blocks. The result is mk-uniform on mn vertices
/// with the same edge count and degrees. ValidationError if the partition does
/// not have n blocks of size m.
Hypergraph blowout(const Hypergraph& h, std::size_t m, const std::optional<BlockPartition>& partition = std::nullopt);

/// Union of hypergraphs on a common vertex set with a common uniformity.
/// ValidationError on a size mismatch or an edge present in two parts.
Hypergraph edge_disjoint_union(std::span<const Hypergraph> parts);

/// C_{2k+1} on 0..2k, a perfect matching on 2k+1..4k, and every edge between
/// the two sets: (2k+2)-regular on 4k+1 vertices, without the MMS property.
Graph counterexample_regular(std::size_t k);

/// Splits an even degree d into at most `terms` values from allowed ∪ {0}.
/// With M = max(allowed)/2 and s = d/2: s itself if s <= M, else q copies of M
/// plus r (r = 0: nothing; r >= 2: one term r; r = 1: M, 1 become M-1, 2), all
/// doubled. If that leaves a value outside `allowed` (a gappy set), falls back
/// to a fewest-terms decomposition. Nothing when no decomposition fits.
std::optional<std::vector<std::size_t>> compose_regularity(std::size_t d, const std::set<std::size_t>& allowed,
                                                           std::size_t terms);

/// Edge-disjoint union of the blowouts of graphs[i] over family.members[i].
/// ValidationError when the family is not conflictless for pairs of blocks or
/// the sizes disagree.
Hypergraph blowout_union_from_family(const PartitionFamily& family, std::span<const Graph> graphs);

} // namespace mms
