#pragma once

#include "mms/hypergraph.hpp"
#include "mms/limits.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace mms {

/// Bipartite graph with sides indexed locally (0..|A|-1, 0..|B|-1). Each side
/// carries labels, which are host vertex ids when built from a graph and the
/// local indices otherwise.
class BipartiteGraph {
public:
    using LocalEdge = std::pair<std::uint32_t, std::uint32_t>; // (left index, right index)

    BipartiteGraph(std::size_t left, std::size_t right, std::vector<LocalEdge> edges);
    BipartiteGraph(VertexSet left_labels, VertexSet right_labels, std::vector<LocalEdge> edges);

    /// Edges of g - removed running between the disjoint sets a and b.
    static BipartiteGraph from_graph(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     const EdgeSet& removed = {});

    [[nodiscard]] std::size_t left_size() const noexcept { return left_.size(); }
    [[nodiscard]] std::size_t right_size() const noexcept { return right_.size(); }
    [[nodiscard]] const VertexSet& left_labels() const noexcept { return left_; }
    [[nodiscard]] const VertexSet& right_labels() const noexcept { return right_; }
    [[nodiscard]] const std::vector<LocalEdge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::uint32_t>& left_neighbours(std::size_t u) const { return adj_.at(u); }

private:
    VertexSet left_;
    VertexSet right_;
    std::vector<LocalEdge> edges_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

/// Edges as (left label, right label).
using Matching = std::vector<std::pair<Vertex, Vertex>>;

struct MatchingFamily {
    std::vector<Matching> matchings;
};

/// Maximum matching size (Hopcroft–Karp).
std::size_t maximum_matching_size(const BipartiteGraph& b);

/// A left subset S (as labels) with |N(S)| < |S|, from the vertices reachable by
/// alternating paths out of the left vertices a maximum matching leaves free.
std::optional<VertexSet> hall_violator(const BipartiteGraph& b);

/// For all S within the left side: sum over right vertices v of
/// min(k, |N(v) ∩ S|) >= k|S|. Exhaustive; CapacityError above
/// limits.max_lebensold_side left vertices.
bool lebensold_check(const BipartiteGraph& b, std::size_t k, const Limits& limits = {});

/// k pairwise edge-disjoint matchings each saturating the left side, or nothing
/// when none exist. Integral max flow picks a subgraph with left degrees exactly k
/// and right degrees at most k; bipartite edge colouring splits it into k matchings.
std::optional<MatchingFamily> edge_disjoint_matchings(const BipartiteGraph& b, std::size_t k);

struct CorollaryResult {
    std::size_t max_inner_degree = 0; // largest degree of G[A]
    BipartiteGraph bipartite;         // A versus N(A) \ A
    MatchingFamily family;            // delta(G) - max_inner_degree matchings
};

/// For nonempty A with |A| <= delta/2: delta - Δ_A edge-disjoint A-saturating
/// matchings between A and its outside neighbourhood. PreconditionError otherwise;
/// InternalError if the construction fails.
CorollaryResult corollary_matchings(const Graph& g, const VertexSet& a);

} // namespace mms
