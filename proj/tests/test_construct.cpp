#include "mms/circulant.hpp"
#include "mms/construct.hpp"
#include "mms/errors.hpp"
#include "mms/partitions.hpp"
#include "mms/random.hpp"
#include "mms/verify.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

using namespace mms;

namespace {

BlockPartition pairs_partition(std::size_t n, bool consecutive) {
    // consecutive: {2i, 2i+1}; otherwise {i, i + n}.
    std::vector<VertexSet> blocks;
    for (Vertex i = 0; i < n; ++i) {
        if (consecutive) blocks.push_back({2 * i, 2 * i + 1});
        else blocks.push_back({i, static_cast<Vertex>(i + n)});
    }
    return BlockPartition(2, blocks);
}

} // namespace

TEST(BlockPartition, Validates) {
    EXPECT_NO_THROW(BlockPartition(2, {{0, 3}, {1, 2}}));
    EXPECT_THROW(BlockPartition(2, {{0, 1}, {1, 2}}), ValidationError);
    EXPECT_THROW(BlockPartition(2, {{0, 1}, {2}}), ValidationError);
    EXPECT_THROW(BlockPartition(2, {{0, 1}, {2, 4}}), ValidationError);
    EXPECT_THROW(BlockPartition(0, {}), ValidationError);
    const BlockPartition p = default_blowout_partition(3, 2);
    EXPECT_EQ(p.blocks(), (std::vector<VertexSet>{{0, 3}, {1, 4}, {2, 5}}));
}

TEST(Blowout, Examples) {
    const Hypergraph c4 = blowout(oracle::cycle(4), 2);
    EXPECT_EQ(c4.vertex_count(), 8u);
    EXPECT_EQ(c4.uniformity(), 4u);
    EXPECT_EQ(c4.edge_count(), 4u);
    EXPECT_TRUE(is_regular(c4, 2));
    EXPECT_EQ(c4, oracle::fixture("c4_blowout2"));

    const Hypergraph k11 = blowout(oracle::complete_graph(11), 2);
    EXPECT_EQ(k11.vertex_count(), 22u);
    EXPECT_EQ(k11.uniformity(), 4u);
    EXPECT_EQ(k11.edge_count(), 55u);
    EXPECT_TRUE(is_regular(k11, 10));

    const Graph k3 = oracle::complete_graph(3);
    EXPECT_EQ(blowout(k3, 1), static_cast<const Hypergraph&>(k3));
    EXPECT_THROW(blowout(k3, 2, BlockPartition(2, {{0, 1}, {2, 3}})), ValidationError);
    EXPECT_THROW(blowout(k3, 0), ValidationError);
}

TEST(Blowout, PreservesDegreesAndClassSums) {
    oracle::Gen gen(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + gen.below(5);
        const std::size_t k = 1 + gen.below(3);
        const Hypergraph h = gen.hypergraph(n, k, 1 + gen.below(10));
        const std::size_t m = 1 + gen.below(3);
        // Random class layout.
        std::vector<Vertex> perm(n * m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen.engine());
        std::vector<VertexSet> blocks(n);
        for (std::size_t i = 0; i < n * m; ++i) blocks[i / m].push_back(perm[i]);
        const BlockPartition classes(m, blocks);
        const Hypergraph big = blowout(h, m, classes);
        ASSERT_EQ(big.edge_count(), h.edge_count());
        EXPECT_EQ(big.uniformity(), k * m);
        EXPECT_EQ(min_degree(big), min_degree(h));
        for (Vertex i = 0; i < n; ++i)
            for (Vertex v : classes.block(i)) EXPECT_EQ(big.degree(v), h.degree(i));

        const Weighting f = gen.weighting(n * m, 9, 5);
        std::vector<Rational> g(n, Rational(0));
        for (Vertex i = 0; i < n; ++i)
            for (Vertex v : classes.block(i)) g[i] += f[v];
        const Weighting gw(g);
        // Match edges through the classes they cover.
        std::map<Edge, Rational> small_sums;
        for (EdgeId e = 0; e < h.edge_count(); ++e) small_sums[h.edge(e)] = edge_sum(h, e, gw);
        std::vector<Vertex> owner(n * m);
        for (Vertex i = 0; i < n; ++i)
            for (Vertex v : classes.block(i)) owner[v] = i;
        for (EdgeId e = 0; e < big.edge_count(); ++e) {
            std::set<Vertex> cls;
            for (Vertex v : big.edge(e)) cls.insert(owner[v]);
            EXPECT_EQ(edge_sum(big, e, f), small_sums.at(Edge(cls.begin(), cls.end())));
        }
        EXPECT_EQ(f.sum(), gw.sum());
        EXPECT_EQ(nonneg_edge_count(big, f), nonneg_edge_count(h, gw));
    }
}

TEST(EdgeDisjointUnion, Examples) {
    const Hypergraph m1(4, 2, {{0, 1}, {2, 3}});
    const Hypergraph m2(4, 2, {{1, 2}, {0, 3}});
    const std::vector<Hypergraph> parts{m1, m2};
    EXPECT_EQ(edge_disjoint_union(parts), static_cast<const Hypergraph&>(oracle::cycle(4)));

    const std::vector<Hypergraph> clash{m1, Hypergraph(4, 2, {{0, 1}})};
    try {
        edge_disjoint_union(clash);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("[0,1]"), std::string::npos) << e.what();
    }
    const std::vector<Hypergraph> mismatch{m1, Hypergraph(5, 2, {})};
    EXPECT_THROW(edge_disjoint_union(mismatch), ValidationError);
}

TEST(EdgeDisjointUnion, CountsAreAdditive) {
    oracle::Gen gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Hypergraph all = gen.hypergraph(7, 3, 10);
        std::vector<Edge> a;
        std::vector<Edge> b;
        for (const auto& e : all.edges()) (gen.chance(1, 2) ? a : b).push_back(e);
        const std::vector<Hypergraph> parts{Hypergraph(7, 3, a), Hypergraph(7, 3, b)};
        const Hypergraph u = edge_disjoint_union(parts);
        const Weighting f = gen.weighting(7, 5);
        EXPECT_EQ(nonneg_edge_count(u, f), nonneg_edge_count(parts[0], f) + nonneg_edge_count(parts[1], f));
    }
}

TEST(Counterexample, RegularAndFailing) {
    for (std::size_t k = 1; k <= 3; ++k) {
        const Graph g = counterexample_regular(k);
        EXPECT_EQ(g.vertex_count(), 4 * k + 1);
        EXPECT_TRUE(is_regular(g, 2 * k + 2));
        const MmsVerdict v = check_mms_graph(g);
        ASSERT_FALSE(v.holds);
        EXPECT_GE(v.witness->weighting.sum(), 0);
        EXPECT_LT(nonneg_edge_count(g, v.witness->weighting), 2 * k + 2);
    }
    EXPECT_EQ(counterexample_regular(1), static_cast<const Hypergraph&>(oracle::complete_graph(5)));
    EXPECT_THROW(counterexample_regular(0), PreconditionError);
}

TEST(ComposeRegularity, Examples) {
    EXPECT_EQ(compose_regularity(16, {4, 6, 8, 10}, 2), (std::vector<std::size_t>{10, 6}));
    EXPECT_EQ(compose_regularity(4, {4}, 1), (std::vector<std::size_t>{4}));
    EXPECT_EQ(compose_regularity(0, {4}, 1), std::vector<std::size_t>{});
    EXPECT_FALSE(compose_regularity(2 * 5 * 3 + 2, {4, 6, 8, 10}, 3).has_value());
    EXPECT_FALSE(compose_regularity(2, {4, 6}, 5).has_value());
    EXPECT_FALSE(compose_regularity(7, {4, 6}, 5).has_value());
    EXPECT_EQ(compose_regularity(22, {4, 6, 8, 10}, 3), (std::vector<std::size_t>{10, 8, 4}));
    EXPECT_THROW(compose_regularity(8, {3}, 2), PreconditionError);
}

TEST(ComposeRegularity, CoversEveryEvenDegree) {
    for (std::size_t top : {6u, 10u, 12u}) {
        std::set<std::size_t> allowed;
        for (std::size_t x = 4; x <= top; x += 2) allowed.insert(x);
        for (std::size_t terms = 1; terms <= 4; ++terms) {
            for (std::size_t d = 0; d <= terms * top + 4; d += 2) {
                const auto parts = compose_regularity(d, allowed, terms);
                const bool expected = d != 2 && d <= terms * top;
                ASSERT_EQ(parts.has_value(), expected) << d << " " << terms << " " << top;
                if (!parts) continue;
                EXPECT_LE(parts->size(), terms);
                EXPECT_EQ(std::accumulate(parts->begin(), parts->end(), std::size_t{0}), d);
                for (auto p : *parts) EXPECT_TRUE(allowed.count(p)) << p;
            }
        }
    }
    // A gappy allowed set drops to the fewest-terms fallback.
    EXPECT_EQ(compose_regularity(12, {4, 10}, 3), (std::vector<std::size_t>{4, 4, 4}));
    EXPECT_FALSE(compose_regularity(12, {4, 10}, 2).has_value());
}

TEST(BlowoutUnion, WorkedExample) {
    const Graph k11 = oracle::complete_graph(11);
    const Graph c11 = build_circulant({11, {1, 2, 3}});
    const std::vector<Hypergraph> parts{blowout(k11, 2, pairs_partition(11, true)), blowout(c11, 2, pairs_partition(11, false))};
    const Hypergraph h = edge_disjoint_union(parts);
    EXPECT_EQ(h.vertex_count(), 22u);
    EXPECT_EQ(h.uniformity(), 4u);
    EXPECT_EQ(h.edge_count(), 55u + 33u);
    EXPECT_TRUE(is_regular(h, 16));
}

TEST(BlowoutUnion, FromFamily) {
    PartitionFamily one{4, 2, {default_blowout_partition(4, 2)}};
    const std::vector<Graph> c4{oracle::cycle(4)};
    EXPECT_EQ(blowout_union_from_family(one, c4), blowout(oracle::cycle(4), 2));

    PartitionFamily pairs = prime_pairings(11);
    pairs.members.resize(2);
    const std::vector<Graph> graphs{oracle::complete_graph(11), build_circulant({11, {1, 2, 3}})};
    const Hypergraph h = blowout_union_from_family(pairs, graphs);
    EXPECT_TRUE(is_regular(h, 16));
    EXPECT_EQ(h.edge_count(), 88u);

    PartitionFamily clash{2, 2, {BlockPartition(2, {{0, 1}, {2, 3}}), BlockPartition(2, {{0, 2}, {1, 3}})}};
    const std::vector<Graph> two{Graph(2, {{0, 1}}), Graph(2, {{0, 1}})};
    EXPECT_THROW(blowout_union_from_family(clash, two), ValidationError);
    EXPECT_THROW(blowout_union_from_family(pairs, c4), ValidationError);
}

TEST(RegularDegreeBound, SampledGraphsHaveMms) {
    for (std::size_t n = 8; n <= 11; ++n) {
        for (std::size_t d = (n + 1) / 2 + 2; d < n; ++d) {
            if (n * d % 2 != 0) continue;
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                const Graph g = sample_regular(n, d, seed);
                ASSERT_TRUE(is_regular(g, d));
                EXPECT_TRUE(check_mms_graph(g).holds) << serialize(g);
            }
        }
    }
}
