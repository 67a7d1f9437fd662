#pragma once

#include "mms/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mms {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Edge = std::vector<Vertex>;     // strictly increasing
using VertexSet = std::vector<Vertex>; // strictly increasing

/// Sorts and deduplicates; throws ValidationError if any vertex is >= n.
VertexSet make_vertex_set(std::vector<Vertex> vertices, std::size_t n);

/// A k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept in canonical form: vertices sorted within an edge, edges sorted
/// lexicographically, no duplicates. An EdgeId is an index into that canonical list.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Validates and canonicalises. Throws ValidationError naming the offending edge.
    Hypergraph(std::size_t n, std::size_t k, std::vector<Edge> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t uniformity() const noexcept { return k_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(EdgeId id) const { return edges_.at(id); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }
    /// Edge ids containing v, increasing.
    [[nodiscard]] const std::vector<EdgeId>& incident_edges(Vertex v) const { return incidence_.at(v); }
    /// Id of the edge with these vertices, in any order.
    [[nodiscard]] std::optional<EdgeId> find_edge(const Edge& e) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::size_t k_ = 2;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// A 2-uniform hypergraph with an O(1) adjacency index.
class Graph : public Hypergraph {
public:
    Graph() = default;
    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    /// Throws ValidationError unless h is 2-uniform.
    explicit Graph(const Hypergraph& h);

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
    [[nodiscard]] const std::vector<Vertex>& neighbours(Vertex v) const { return neighbours_.at(v); }

private:
    void build_index();

    std::vector<std::vector<Vertex>> neighbours_;
    std::vector<std::int32_t> edge_index_; // n*n, -1 when absent
};

/// A subset of a host hypergraph's edges, by id. Sorted and duplicate-free.
class EdgeSet {
public:
    EdgeSet() = default;
    /// Throws ValidationError on an out-of-range or repeated id.
    EdgeSet(const Hypergraph& host, std::vector<EdgeId> ids);

    [[nodiscard]] const std::vector<EdgeId>& ids() const noexcept { return ids_; }
    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ids_.empty(); }
    [[nodiscard]] bool contains(EdgeId id) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<EdgeId> ids_;
};

/// One exact rational weight per vertex.
class Weighting {
public:
    Weighting() = default;
    explicit Weighting(std::vector<Rational> values) : values_(std::move(values)) {}
    Weighting(std::size_t n, const Rational& fill) : values_(n, fill) {}

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }
    [[nodiscard]] const Rational& operator[](std::size_t v) const { return values_[v]; }
    Rational& operator[](std::size_t v) { return values_[v]; }
    [[nodiscard]] Rational sum() const;

    friend bool operator==(const Weighting&, const Weighting&) = default;

private:
    std::vector<Rational> values_;
};

/// Minimum vertex degree; 0 for an empty vertex set.
std::size_t min_degree(const Hypergraph& h);

/// True iff every vertex has degree d.
bool is_regular(const Hypergraph& h, std::size_t d);

Rational edge_sum(const Hypergraph& h, EdgeId e, const Weighting& f);

/// Number of edges whose weight sum is >= 0. Throws ValidationError on a length mismatch.
std::size_t nonneg_edge_count(const Hypergraph& h, const Weighting& f);

/// Edges lying entirely inside `a`.
EdgeSet induced_edge_set(const Hypergraph& h, const VertexSet& a);

/// True iff no edge outside `deleted` lies entirely inside `a`.
bool is_independent(const Hypergraph& h, const VertexSet& a, const EdgeSet& deleted);

} // namespace mms
