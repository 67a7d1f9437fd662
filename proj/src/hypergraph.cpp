#include "mms/hypergraph.hpp"

#include "mms/errors.hpp"

#include <algorithm>
#include <string>

namespace mms {

namespace {

std::string edge_to_string(const Edge& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(e[i]);
    }
    return out + "]";
}

std::vector<bool> membership(const VertexSet& a, std::size_t n) {
    std::vector<bool> in(n, false);
    for (Vertex v : a) {
        if (v >= n) throw ValidationError("vertex " + std::to_string(v) + " out of range");
        in[v] = true;
    }
    return in;
}

} // namespace

VertexSet make_vertex_set(std::vector<Vertex> vertices, std::size_t n) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (!vertices.empty() && vertices.back() >= n) {
        throw ValidationError("vertex " + std::to_string(vertices.back()) + " out of range [0," +
                              std::to_string(n) + ")");
    }
    return vertices;
}

Hypergraph::Hypergraph(std::size_t n, std::size_t k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
    if (k_ == 0) throw ValidationError("uniformity must be positive");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        const std::string where = "edges[" + std::to_string(i) + "] " + edge_to_string(e);
        if (e.size() != k_) {
            throw ValidationError(where + ": expected " + std::to_string(k_) + " vertices");
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw ValidationError(where + ": repeated vertex");
        }
        if (e.back() >= n_) throw ValidationError(where + ": vertex out of range [0," + std::to_string(n_) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw ValidationError("duplicate edge " + edge_to_string(*dup));
    }
    incidence_.assign(n_, {});
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        for (Vertex v : edges_[id]) incidence_[v].push_back(id);
    }
}

std::optional<EdgeId> Hypergraph::find_edge(const Edge& edge) const {
    Edge e = edge;
    std::sort(e.begin(), e.end());
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

namespace {

std::vector<Edge> pairs_to_edges(const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) out.push_back({u, v});
    return out;
}

} // namespace

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : Hypergraph(n, 2, pairs_to_edges(edges)) {
    build_index();
}

Graph::Graph(const Hypergraph& h) : Hypergraph(h) {
    if (h.uniformity() != 2) {
        throw ValidationError("expected a graph (k=2), got k=" + std::to_string(h.uniformity()));
    }
    build_index();
}

void Graph::build_index() {
    const std::size_t n = vertex_count();
    neighbours_.assign(n, {});
    edge_index_.assign(n * n, -1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
        const Edge& e = edge(id);
        neighbours_[e[0]].push_back(e[1]);
        neighbours_[e[1]].push_back(e[0]);
        edge_index_[e[0] * n + e[1]] = static_cast<std::int32_t>(id);
        edge_index_[e[1] * n + e[0]] = static_cast<std::int32_t>(id);
    }
    for (auto& list : neighbours_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    const std::size_t n = vertex_count();
    if (u >= n || v >= n) return std::nullopt;
    const std::int32_t id = edge_index_[u * n + v];
    if (id < 0) return std::nullopt;
    return static_cast<EdgeId>(id);
}

EdgeSet::EdgeSet(const Hypergraph& host, std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
        throw ValidationError("edge set lists an edge twice");
    }
    if (!ids_.empty() && ids_.back() >= host.edge_count()) {
        throw ValidationError("edge id " + std::to_string(ids_.back()) + " out of range");
    }
}

bool EdgeSet::contains(EdgeId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

Rational Weighting::sum() const {
    Rational total = 0;
    for (const auto& x : values_) total += x;
    return total;
}

std::size_t min_degree(const Hypergraph& h) {
    if (h.vertex_count() == 0) return 0;
    std::size_t best = h.degree(0);
    for (Vertex v = 1; v < h.vertex_count(); ++v) best = std::min(best, h.degree(v));
    return best;
}

bool is_regular(const Hypergraph& h, std::size_t d) {
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) != d) return false;
    }
    return true;
}

Rational edge_sum(const Hypergraph& h, EdgeId e, const Weighting& f) {
    Rational s = 0;
    for (Vertex v : h.edge(e)) s += f[v];
    return s;
}

std::size_t nonneg_edge_count(const Hypergraph& h, const Weighting& f) {
    if (f.size() != h.vertex_count()) {
        throw ValidationError("weighting has " + std::to_string(f.size()) + " values for " +
                              std::to_string(h.vertex_count()) + " vertices");
    }
    std::size_t count = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (sgn(edge_sum(h, e, f)) >= 0) ++count;
    }
    return count;
}

EdgeSet induced_edge_set(const Hypergraph& h, const VertexSet& a) {
    const auto in = membership(a, h.vertex_count());
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const Edge& edge = h.edge(e);
        if (std::all_of(edge.begin(), edge.end(), [&](Vertex v) { return in[v]; })) ids.push_back(e);
    }
    return EdgeSet(h, std::move(ids));
}

bool is_independent(const Hypergraph& h, const VertexSet& a, const EdgeSet& deleted) {
    const EdgeSet inside = induced_edge_set(h, a);
    for (EdgeId e : inside.ids()) {
        if (!deleted.contains(e)) return false;
    }
    return true;
}

} // namespace mms
