#include "mms/construct.hpp"

#include "mms/errors.hpp"
#include "mms/partitions.hpp"

#include <algorithm>
#include <string>

namespace mms {

Hypergraph blowout(const Hypergraph& h, std::size_t m, const std::optional<BlockPartition>& partition) {
    if (m == 0) throw ValidationError("blowout: m must be positive");
    const std::size_t n = h.vertex_count();
    const BlockPartition classes = partition ? *partition : default_blowout_partition(n, m);
    if (classes.block_size() != m || classes.block_count() != n) {
        throw ValidationError("blowout: partition must have " + std::to_string(n) + " blocks of size " + std::to_string(m));
    }
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (const Edge& e : h.edges()) {
        Edge big;
        big.reserve(e.size() * m);
        for (Vertex v : e) big.insert(big.end(), classes.block(v).begin(), classes.block(v).end());
        edges.push_back(std::move(big));
    }
    return Hypergraph(n * m, h.uniformity() * m, std::move(edges));
}

Hypergraph edge_disjoint_union(std::span<const Hypergraph> parts) {
    if (parts.empty()) throw ValidationError("edge_disjoint_union: no parts");
    const std::size_t n = parts.front().vertex_count();
    const std::size_t k = parts.front().uniformity();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].vertex_count() != n || parts[i].uniformity() != k) {
            throw ValidationError("edge_disjoint_union: part " + std::to_string(i) + " has a different vertex count or uniformity");
        }
        edges.insert(edges.end(), parts[i].edges().begin(), parts[i].edges().end());
    }
    try {
        return Hypergraph(n, k, std::move(edges));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("edge_disjoint_union: parts share an edge: ") + e.what());
    }
}

Graph counterexample_regular(std::size_t k) {
    if (k == 0) throw PreconditionError("counterexample_regular: k must be at least 1");
    const auto cycle = static_cast<Vertex>(2 * k + 1);
    const auto n = static_cast<Vertex>(4 * k + 1);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < cycle; ++i) edges.emplace_back(i, (i + 1) % cycle);
    for (Vertex i = cycle; i < n; i += 2) edges.emplace_back(i, i + 1);
    for (Vertex i = 0; i < cycle; ++i) {
        for (Vertex j = cycle; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, edges);
}

namespace {

// Fewest terms from `parts` (each used any number of times) summing to `total`.
std::optional<std::vector<std::size_t>> fewest_terms(std::size_t total, const std::vector<std::size_t>& parts) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> count(total + 1, kNone);
    std::vector<std::size_t> last(total + 1, 0);
    count[0] = 0;
    for (std::size_t t = 1; t <= total; ++t) {
        for (auto p : parts) {
            if (p == 0 || p > t || count[t - p] == kNone) continue;
            if (count[t - p] + 1 < count[t]) {
                count[t] = count[t - p] + 1;
                last[t] = p;
            }
        }
    }
    if (count[total] == kNone) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t t = total; t > 0; t -= last[t]) out.push_back(last[t]);
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace

std::optional<std::vector<std::size_t>> compose_regularity(std::size_t d, const std::set<std::size_t>& allowed,
                                                           std::size_t terms) {
    if (d % 2 != 0) return std::nullopt;
    for (auto a : allowed) {
        if (a != 0 && (a % 2 != 0 || a < 4)) throw PreconditionError("compose_regularity: allowed degrees must be 0 or even >= 4");
    }
    if (d == 0) return std::vector<std::size_t>{};
    if (allowed.empty() || *allowed.rbegin() == 0) return std::nullopt;
    const std::size_t top = *allowed.rbegin();
    if (d > terms * top) return std::nullopt;

    const std::size_t big = top / 2;
    const std::size_t s = d / 2;
    std::vector<std::size_t> halves;
    if (s <= big) {
        halves = {s};
    } else {
        const std::size_t q = s / big;
        const std::size_t r = s % big;
        halves.assign(q, big);
        if (r >= 2) {
            halves.push_back(r);
        } else if (r == 1) {
            halves.back() = big - 1;
            halves.push_back(2);
        }
    }
    std::vector<std::size_t> out;
    for (auto h : halves) out.push_back(2 * h);
    std::sort(out.rbegin(), out.rend());
    const bool fits = std::all_of(out.begin(), out.end(), [&](std::size_t x) { return allowed.count(x) > 0; });
    if (fits && out.size() <= terms) return out;

    auto fallback = fewest_terms(d, std::vector<std::size_t>(allowed.begin(), allowed.end()));
    if (!fallback || fallback->size() > terms) return std::nullopt;
    return fallback;
}

Hypergraph blowout_union_from_family(const PartitionFamily& family, std::span<const Graph> graphs) {
    if (family.members.size() != graphs.size()) {
        throw ValidationError("blowout_union_from_family: " + std::to_string(family.members.size()) + " partitions for " +
                              std::to_string(graphs.size()) + " graphs");
    }
    if (graphs.empty()) throw ValidationError("blowout_union_from_family: empty family");
    if (!is_conflictless(family, 2)) throw ValidationError("blowout_union_from_family: family has a conflict");
    std::vector<Hypergraph> parts;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].vertex_count() != family.n) {
            throw ValidationError("blowout_union_from_family: graph " + std::to_string(i) + " must have " +
                                  std::to_string(family.n) + " vertices");
        }
        parts.push_back(blowout(graphs[i], family.m, family.members[i]));
    }
    return edge_disjoint_union(parts);
}

} // namespace mms
