#include "mms/errors.hpp"
#include "mms/matchings.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace mms;
using LocalEdge = BipartiteGraph::LocalEdge;

namespace {

BipartiteGraph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<LocalEdge> edges;
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = 0; j < b; ++j) edges.emplace_back(i, j);
    return BipartiteGraph(a, b, edges);
}

BipartiteGraph from_mask(std::size_t a, std::size_t b, std::uint32_t mask) {
    std::vector<LocalEdge> edges;
    for (std::uint32_t i = 0; i < a; ++i)
        for (std::uint32_t j = 0; j < b; ++j)
            if ((mask >> (i * b + j)) & 1u) edges.emplace_back(i, j);
    return BipartiteGraph(a, b, edges);
}

std::size_t brute_matching(const BipartiteGraph& g, std::size_t edge, std::uint32_t used_l, std::uint32_t used_r) {
    if (edge == g.edges().size()) return 0;
    std::size_t best = brute_matching(g, edge + 1, used_l, used_r);
    const auto [u, v] = g.edges()[edge];
    if (!((used_l >> u) & 1u) && !((used_r >> v) & 1u)) {
        best = std::max(best, 1 + brute_matching(g, edge + 1, used_l | (1u << u), used_r | (1u << v)));
    }
    return best;
}

bool brute_hall_fails(const BipartiteGraph& g) {
    for (std::uint32_t s = 1; s < (1u << g.left_size()); ++s) {
        std::uint32_t nb = 0;
        for (auto [u, v] : g.edges())
            if ((s >> u) & 1u) nb |= 1u << v;
        if (std::popcount(nb) < std::popcount(s)) return true;
    }
    return false;
}

// Checks that `family` holds k edge-disjoint matchings of g, each saturating the left side.
void expect_valid_family(const BipartiteGraph& g, const MatchingFamily& family, std::size_t k) {
    ASSERT_EQ(family.matchings.size(), k);
    std::set<std::pair<Vertex, Vertex>> host;
    for (auto [u, v] : g.edges()) host.emplace(g.left_labels()[u], g.right_labels()[v]);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& m : family.matchings) {
        EXPECT_EQ(m.size(), g.left_size());
        std::set<Vertex> lefts;
        std::set<Vertex> rights;
        for (const auto& e : m) {
            EXPECT_TRUE(host.count(e)) << e.first << "-" << e.second;
            EXPECT_TRUE(seen.insert(e).second) << "edge reused";
            lefts.insert(e.first);
            rights.insert(e.second);
        }
        EXPECT_EQ(lefts.size(), m.size());
        EXPECT_EQ(rights.size(), m.size());
        EXPECT_EQ(lefts, std::set<Vertex>(g.left_labels().begin(), g.left_labels().end()));
    }
}

} // namespace

TEST(HallViolator, Examples) {
    EXPECT_FALSE(hall_violator(complete_bipartite(3, 3)).has_value());

    const BipartiteGraph star(3, 1, {{0, 0}, {1, 0}, {2, 0}});
    const auto s = hall_violator(star);
    ASSERT_TRUE(s.has_value());
    EXPECT_GE(s->size(), 2u);

    const Graph c5 = oracle::cycle(5);
    const EdgeSet removed(c5, {*c5.edge_id(4, 0)});
    const auto b = BipartiteGraph::from_graph(c5, {0, 2, 4}, {1, 3}, removed);
    EXPECT_EQ(hall_violator(b), std::optional<VertexSet>(VertexSet{0, 2, 4}));
}

TEST(HallViolator, MatchesBruteForce) {
    oracle::Gen gen(13);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t a = 1 + gen.below(5);
        const std::size_t b = 1 + gen.below(5);
        const auto g = from_mask(a, b, static_cast<std::uint32_t>(gen.below(1u << (a * b))));
        EXPECT_EQ(maximum_matching_size(g), brute_matching(g, 0, 0, 0));
        const auto s = hall_violator(g);
        EXPECT_EQ(s.has_value(), brute_hall_fails(g));
        if (s) {
            std::set<std::uint32_t> nb;
            for (auto [u, v] : g.edges())
                if (std::find(s->begin(), s->end(), g.left_labels()[u]) != s->end()) nb.insert(v);
            EXPECT_LT(nb.size(), s->size());
        }
    }
}

TEST(Lebensold, Examples) {
    EXPECT_TRUE(lebensold_check(complete_bipartite(3, 3), 3));
    EXPECT_FALSE(lebensold_check(BipartiteGraph(3, 1, {{0, 0}, {1, 0}, {2, 0}}), 1));
    const Graph c4 = oracle::cycle(4);
    const auto b = BipartiteGraph::from_graph(c4, {0, 2}, {1, 3});
    EXPECT_TRUE(lebensold_check(b, 2));
    EXPECT_FALSE(lebensold_check(b, 3));
    Limits small;
    small.max_lebensold_side = 2;
    EXPECT_THROW(lebensold_check(complete_bipartite(3, 3), 1, small), CapacityError);
}

TEST(EdgeDisjointMatchings, Examples) {
    const auto k33 = complete_bipartite(3, 3);
    const auto fam = edge_disjoint_matchings(k33, 3);
    ASSERT_TRUE(fam.has_value());
    expect_valid_family(k33, *fam, 3);

    const Graph c4 = oracle::cycle(4);
    const auto b = BipartiteGraph::from_graph(c4, {0, 2}, {1, 3});
    const auto two = edge_disjoint_matchings(b, 2);
    ASSERT_TRUE(two.has_value());
    expect_valid_family(b, *two, 2);
    EXPECT_FALSE(edge_disjoint_matchings(b, 3).has_value());
}

TEST(EdgeDisjointMatchings, EquivalentToLebensoldOnSmallGraphs) {
    // Every bipartite graph with sides of size at most 3, k <= 3.
    for (std::size_t a = 1; a <= 3; ++a) {
        for (std::size_t b = 1; b <= 3; ++b) {
            for (std::uint32_t mask = 0; mask < (1u << (a * b)); ++mask) {
                const auto g = from_mask(a, b, mask);
                for (std::size_t k = 1; k <= 3; ++k) {
                    const auto fam = edge_disjoint_matchings(g, k);
                    ASSERT_EQ(fam.has_value(), lebensold_check(g, k)) << a << "x" << b << " mask " << mask << " k " << k;
                    if (fam) expect_valid_family(g, *fam, k);
                }
            }
        }
    }
}

TEST(CorollaryMatchings, Examples) {
    const Graph k6 = oracle::complete_graph(6);
    const auto one = corollary_matchings(k6, {0});
    EXPECT_EQ(one.max_inner_degree, 0u);
    ASSERT_EQ(one.family.matchings.size(), 5u);
    for (const auto& m : one.family.matchings) EXPECT_EQ(m.size(), 1u);

    const auto two = corollary_matchings(k6, {0, 1});
    EXPECT_EQ(two.max_inner_degree, 1u);
    expect_valid_family(two.bipartite, two.family, 4);

    const Graph petersen(oracle::fixture("petersen"));
    const auto p = corollary_matchings(petersen, {7});
    expect_valid_family(p.bipartite, p.family, 3);

    EXPECT_THROW(corollary_matchings(k6, {0, 1, 2}), PreconditionError);
    EXPECT_THROW(corollary_matchings(k6, {}), PreconditionError);
}

TEST(CorollaryMatchings, RandomGraphs) {
    oracle::Gen gen(77);
    int runs = 0;
    while (runs < 100) {
        const std::size_t n = 5 + gen.below(8);
        const Graph g = gen.graph(n, 2 + gen.below(2), 4);
        const std::size_t delta = oracle::smallest_degree(g);
        if (delta < 2) continue;
        VertexSet a;
        const std::size_t size = 1 + gen.below(delta / 2);
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), gen.engine());
        a.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(a.begin(), a.end());
        const auto result = corollary_matchings(g, a);
        expect_valid_family(result.bipartite, result.family, delta - result.max_inner_degree);
        ++runs;
    }
}
