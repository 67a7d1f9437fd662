#include "mms/matchings.hpp"

#include "mms/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace mms {

namespace {

VertexSet iota_labels(std::size_t count) {
    VertexSet out(count);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();

struct MaxMatching {
    std::vector<std::uint32_t> left_mate;
    std::vector<std::uint32_t> right_mate;
    std::size_t size = 0;
};

MaxMatching hopcroft_karp(const BipartiteGraph& b) {
    const std::size_t nl = b.left_size();
    MaxMatching m{std::vector<std::uint32_t>(nl, kFree), std::vector<std::uint32_t>(b.right_size(), kFree), 0};
    std::vector<std::uint32_t> level(nl);
    constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

    auto bfs = [&] {
        std::queue<std::uint32_t> queue;
        for (std::uint32_t u = 0; u < nl; ++u) {
            level[u] = m.left_mate[u] == kFree ? 0 : kInf;
            if (level[u] == 0) queue.push(u);
        }
        bool reachable_free = false;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop();
            for (auto v : b.left_neighbours(u)) {
                const auto w = m.right_mate[v];
                if (w == kFree) {
                    reachable_free = true;
                } else if (level[w] == kInf) {
                    level[w] = level[u] + 1;
                    queue.push(w);
                }
            }
        }
        return reachable_free;
    };
    auto dfs = [&](auto&& self, std::uint32_t u) -> bool {
        for (auto v : b.left_neighbours(u)) {
            const auto w = m.right_mate[v];
            if (w == kFree || (level[w] == level[u] + 1 && self(self, w))) {
                m.left_mate[u] = v;
                m.right_mate[v] = u;
                return true;
            }
        }
        level[u] = kInf;
        return false;
    };
    while (bfs()) {
        for (std::uint32_t u = 0; u < nl; ++u) {
            if (m.left_mate[u] == kFree && dfs(dfs, u)) ++m.size;
        }
    }
    return m;
}

// Dinic's max flow on a small dense-ish network.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : graph_(nodes) {}

    std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
        graph_[from].push_back(arcs_.size());
        arcs_.push_back({to, cap});
        graph_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0});
        return arcs_.size() - 2;
    }

    std::int64_t max_flow(std::size_t s, std::size_t t) {
        std::int64_t total = 0;
        while (levels(s, t)) {
            next_.assign(graph_.size(), 0);
            while (std::int64_t pushed = push(s, t, std::numeric_limits<std::int64_t>::max())) total += pushed;
        }
        return total;
    }

    [[nodiscard]] std::int64_t flow_on(std::size_t arc) const { return arcs_[arc ^ 1].cap; }

private:
    struct Arc {
        std::size_t to;
        std::int64_t cap;
    };

    bool levels(std::size_t s, std::size_t t) {
        level_.assign(graph_.size(), -1);
        std::queue<std::size_t> queue;
        level_[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop();
            for (auto id : graph_[u]) {
                if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
                    level_[arcs_[id].to] = level_[u] + 1;
                    queue.push(arcs_[id].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t push(std::size_t u, std::size_t t, std::int64_t limit) {
        if (u == t) return limit;
        for (; next_[u] < graph_[u].size(); ++next_[u]) {
            const auto id = graph_[u][next_[u]];
            Arc& arc = arcs_[id];
            if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
            if (std::int64_t got = push(arc.to, t, std::min(limit, arc.cap)); got > 0) {
                arc.cap -= got;
                arcs_[id ^ 1].cap += got;
                return got;
            }
        }
        return 0;
    }

    std::vector<std::vector<std::size_t>> graph_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

// Proper k-edge-colouring of a bipartite graph with maximum degree <= k by
// alternating-path recolouring. Returns one colour per edge.
std::vector<std::size_t> bipartite_edge_colouring(std::size_t nl, std::size_t nr,
                                                  const std::vector<BipartiteGraph::LocalEdge>& edges,
                                                  std::size_t k) {
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    // at_left[u][c] / at_right[v][c]: edge index with colour c at that vertex.
    std::vector<std::vector<std::size_t>> at_left(nl, std::vector<std::size_t>(k, kNone));
    std::vector<std::vector<std::size_t>> at_right(nr, std::vector<std::size_t>(k, kNone));
    std::vector<std::size_t> colour(edges.size(), kNone);

    auto free_colour = [&](const std::vector<std::size_t>& slots) {
        for (std::size_t c = 0; c < k; ++c) {
            if (slots[c] == kNone) return c;
        }
        throw InternalError("edge colouring: vertex degree exceeds k");
    };

    for (std::size_t id = 0; id < edges.size(); ++id) {
        const auto [u, v] = edges[id];
        const std::size_t a = free_colour(at_left[u]);
        const std::size_t b = free_colour(at_right[v]);
        if (at_right[v][a] != kNone) {
            // Walk the a/b alternating path from v and swap its colours; in a
            // bipartite graph it cannot end at u, so a becomes free at v.
            std::vector<std::size_t> path;
            bool on_right = true;
            std::size_t vertex = v;
            std::size_t want = a;
            for (;;) {
                const std::size_t e = on_right ? at_right[vertex][want] : at_left[vertex][want];
                if (e == kNone) break;
                path.push_back(e);
                vertex = on_right ? edges[e].first : edges[e].second;
                on_right = !on_right;
                want = want == a ? b : a;
            }
            for (auto e : path) {
                at_left[edges[e].first][colour[e]] = kNone;
                at_right[edges[e].second][colour[e]] = kNone;
            }
            for (auto e : path) {
                colour[e] = colour[e] == a ? b : a;
                at_left[edges[e].first][colour[e]] = e;
                at_right[edges[e].second][colour[e]] = e;
            }
        }
        colour[id] = a;
        at_left[u][a] = id;
        at_right[v][a] = id;
    }
    return colour;
}

} // namespace

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right, std::vector<LocalEdge> edges)
    : BipartiteGraph(iota_labels(left), iota_labels(right), std::move(edges)) {}

BipartiteGraph::BipartiteGraph(VertexSet left_labels, VertexSet right_labels, std::vector<LocalEdge> edges)
    : left_(std::move(left_labels)), right_(std::move(right_labels)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw ValidationError("bipartite graph has a repeated edge");
    }
    adj_.assign(left_.size(), {});
    for (auto [u, v] : edges_) {
        if (u >= left_.size() || v >= right_.size()) throw ValidationError("bipartite edge endpoint out of range");
        adj_[u].push_back(v);
    }
}

BipartiteGraph BipartiteGraph::from_graph(const Graph& g, const VertexSet& a, const VertexSet& b,
                                          const EdgeSet& removed) {
    const VertexSet left = make_vertex_set(a, g.vertex_count());
    const VertexSet right = make_vertex_set(b, g.vertex_count());
    std::vector<std::int64_t> right_index(g.vertex_count(), -1);
    for (std::size_t j = 0; j < right.size(); ++j) right_index[right[j]] = static_cast<std::int64_t>(j);
    std::vector<LocalEdge> edges;
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (right_index[left[i]] >= 0) throw ValidationError("bipartite sides must be disjoint");
        for (Vertex w : g.neighbours(left[i])) {
            if (right_index[w] < 0 || removed.contains(*g.edge_id(left[i], w))) continue;
            edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(right_index[w]));
        }
    }
    return BipartiteGraph(left, right, std::move(edges));
}

std::size_t maximum_matching_size(const BipartiteGraph& b) { return hopcroft_karp(b).size; }

std::optional<VertexSet> hall_violator(const BipartiteGraph& b) {
    const MaxMatching m = hopcroft_karp(b);
    if (m.size == b.left_size()) return std::nullopt;
    std::vector<bool> seen_left(b.left_size(), false);
    std::vector<bool> seen_right(b.right_size(), false);
    std::queue<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < b.left_size(); ++u) {
        if (m.left_mate[u] == kFree) {
            seen_left[u] = true;
            queue.push(u);
        }
    }
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop();
        for (auto v : b.left_neighbours(u)) {
            if (seen_right[v]) continue;
            seen_right[v] = true;
            // Every reached right vertex is matched, else the matching would grow.
            const auto w = m.right_mate[v];
            if (!seen_left[w]) {
                seen_left[w] = true;
                queue.push(w);
            }
        }
    }
    VertexSet out;
    for (std::size_t u = 0; u < b.left_size(); ++u) {
        if (seen_left[u]) out.push_back(b.left_labels()[u]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool lebensold_check(const BipartiteGraph& b, std::size_t k, const Limits& limits) {
    if (k == 0) throw PreconditionError("lebensold_check: k must be positive");
    const std::size_t nl = b.left_size();
    if (nl > limits.max_lebensold_side || nl > 63) {
        throw CapacityError("lebensold_check: left side of " + std::to_string(nl) + " exceeds the budget");
    }
    std::vector<std::uint64_t> right_nbhd(b.right_size(), 0);
    for (auto [u, v] : b.edges()) right_nbhd[v] |= std::uint64_t{1} << u;
    const std::uint64_t subsets = std::uint64_t{1} << nl;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        std::size_t supply = 0;
        for (auto nb : right_nbhd) supply += std::min<std::size_t>(k, static_cast<std::size_t>(std::popcount(nb & s)));
        if (supply < k * static_cast<std::size_t>(std::popcount(s))) return false;
    }
    return true;
}

std::optional<MatchingFamily> edge_disjoint_matchings(const BipartiteGraph& b, std::size_t k) {
    if (k == 0) throw PreconditionError("edge_disjoint_matchings: k must be positive");
    const std::size_t nl = b.left_size();
    const std::size_t nr = b.right_size();
    const std::size_t source = nl + nr;
    const std::size_t sink = source + 1;
    FlowNetwork net(nl + nr + 2);
    const auto cap = static_cast<std::int64_t>(k);
    for (std::size_t u = 0; u < nl; ++u) net.add_arc(source, u, cap);
    for (std::size_t v = 0; v < nr; ++v) net.add_arc(nl + v, sink, cap);
    std::vector<std::size_t> arc_of_edge;
    for (auto [u, v] : b.edges()) arc_of_edge.push_back(net.add_arc(u, nl + v, 1));
    if (net.max_flow(source, sink) != cap * static_cast<std::int64_t>(nl)) return std::nullopt;

    std::vector<BipartiteGraph::LocalEdge> chosen;
    for (std::size_t i = 0; i < b.edges().size(); ++i) {
        if (net.flow_on(arc_of_edge[i]) > 0) chosen.push_back(b.edges()[i]);
    }
    const auto colours = bipartite_edge_colouring(nl, nr, chosen, k);
    MatchingFamily family;
    family.matchings.resize(k);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        family.matchings[colours[i]].emplace_back(b.left_labels()[chosen[i].first], b.right_labels()[chosen[i].second]);
    }
    for (auto& m : family.matchings) {
        std::sort(m.begin(), m.end());
        if (m.size() != nl) throw InternalError("edge_disjoint_matchings: colour class does not saturate A");
    }
    return family;
}

CorollaryResult corollary_matchings(const Graph& g, const VertexSet& a) {
    const VertexSet set = make_vertex_set(a, g.vertex_count());
    if (set.empty()) throw PreconditionError("corollary_matchings: A must be nonempty");
    const std::size_t delta = min_degree(g);
    if (2 * set.size() > delta) {
        throw PreconditionError("corollary_matchings: |A| = " + std::to_string(set.size()) +
                                " exceeds delta/2 = " + std::to_string(delta) + "/2");
    }
    std::vector<bool> in_a(g.vertex_count(), false);
    for (Vertex v : set) in_a[v] = true;
    std::size_t inner = 0;
    VertexSet outside;
    for (Vertex v : set) {
        std::size_t d = 0;
        for (Vertex w : g.neighbours(v)) {
            if (in_a[w]) {
                ++d;
            } else {
                outside.push_back(w);
            }
        }
        inner = std::max(inner, d);
    }
    outside = make_vertex_set(std::move(outside), g.vertex_count());
    BipartiteGraph bip = BipartiteGraph::from_graph(g, set, outside);
    auto family = edge_disjoint_matchings(bip, delta - inner);
    if (!family) throw InternalError("corollary_matchings: no family although |A| <= delta/2");
    return {inner, std::move(bip), std::move(*family)};
}

} // namespace mms
