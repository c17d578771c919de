#include "fixtures.hh"
#include "oracles.hh"

#include <snc/errors.hh>
#include <snc/generators.hh>
#include <snc/structure.hh>

#include <gtest/gtest.h>

#include <random>

using namespace snc;
using namespace snc::fixtures;

TEST(StronglyConnected, Examples)
{
    EXPECT_TRUE(is_strongly_connected(c3()));
    EXPECT_FALSE(is_strongly_connected(transitive_triangle()));
    EXPECT_TRUE(is_strongly_connected(single_vertex()));
}

TEST(DirectedCycle, Examples)
{
    EXPECT_TRUE(has_directed_cycle(c3()));
    EXPECT_FALSE(has_directed_cycle(transitive_triangle()));
    EXPECT_FALSE(has_directed_cycle(single_vertex()));

    auto g = Digraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}});
    auto cycle = find_directed_cycle(g);
    ASSERT_TRUE(cycle);
    ASSERT_EQ(cycle->size(), 3u);
    for (std::size_t i = 0; i < cycle->size(); ++i)
        EXPECT_TRUE(g.has_edge((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
}

TEST(UnderlyingGirth, Examples)
{
    EXPECT_EQ(underlying_girth(transitive_triangle()), GirthValue::finite(3));
    EXPECT_EQ(underlying_girth(cycle(5)), GirthValue::finite(5));
    EXPECT_TRUE(underlying_girth(path(6)).is_infinite());
    EXPECT_EQ(underlying_girth(diamond()), GirthValue::finite(4));
}

TEST(TransitiveTriangle, Examples)
{
    EXPECT_TRUE(has_transitive_triangle(transitive_triangle()));
    EXPECT_FALSE(has_transitive_triangle(c3()));
    EXPECT_FALSE(has_transitive_triangle(cycle(5)));
}

TEST(TriangleBaseCount, Examples)
{
    EXPECT_EQ(triangle_base_count(transitive_triangle(), {0, 1}), 1u);
    for (auto g3 = c3(); auto e : g3.edges())
        EXPECT_EQ(triangle_base_count(c3(), e), 0u);

    auto g = Digraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    EXPECT_EQ(triangle_base_count(g, {0, 1}), 2u);

    try {
        triangle_base_count(c3(), {0, 2});
        FAIL();
    }
    catch (const GraphError & e) {
        EXPECT_EQ(e.kind(), ErrorKind::no_such_edge);
    }
}

TEST(DiamondBaseTargets, Examples)
{
    EXPECT_EQ(diamond_base_targets(diamond(), {0, 1}), set(4, {3}));
    EXPECT_EQ(diamond_base_targets(diamond(), {0, 2}), set(4, {3}));
    for (auto g3 = c3(); auto e : g3.edges())
        EXPECT_TRUE(diamond_base_targets(c3(), e).empty());
    EXPECT_TRUE(diamond_base_targets(transitive_triangle(), {0, 1}).empty());
    EXPECT_THROW(diamond_base_targets(c3(), {1, 0}), GraphError);

    auto witnesses = diamond_witnesses(diamond(), {0, 1});
    ASSERT_EQ(witnesses.size(), 1u);
    EXPECT_EQ(witnesses[0], (DiamondWitness{0, 1, 2, 3}));
}

TEST(DiamondBaseTargets, ExtraEdgesAmongTheFourStillCount)
{
    // (t,w) present as well: still a diamond.
    auto g = Digraph::from_edges(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
    EXPECT_EQ(diamond_base_targets(g, {0, 1}), set(4, {3}));
}

TEST(MinOutdegreeVertex, Examples)
{
    EXPECT_EQ(min_outdegree_vertex(transitive_triangle()), 2u);
    EXPECT_EQ(min_outdegree_vertex(c3()), 0u);
}

// Property tests.

TEST(StructureProperties, AgreeWithBruteForce)
{
    std::mt19937_64 rng{0x5eed0101};
    for (int trial = 0; trial < 400; ++trial) {
        auto n = 1 + rng() % 7;
        auto m = oracle::random_matrix(n, 0.15 + 0.12 * (trial % 7), rng);
        auto g = oracle::to_graph(m);

        ASSERT_EQ(has_directed_cycle(g), oracle::has_cycle(m));
        ASSERT_EQ(has_transitive_triangle(g), oracle::has_transitive_triangle(m));
        auto girth = underlying_girth(g);
        auto expected = oracle::underlying_girth(m);
        if (expected == oracle::unreachable)
            ASSERT_TRUE(girth.is_infinite());
        else
            ASSERT_EQ(girth, GirthValue::finite(expected));

        auto any_base = false;
        for (auto e : g.edges()) {
            auto count = triangle_base_count(g, e);
            ASSERT_EQ(count, oracle::common_out(m, e.tail, e.head));
            any_base = any_base || count > 0;

            auto apexes = diamond_base_targets(g, e);
            ASSERT_EQ((std::set<std::size_t>{apexes.begin(), apexes.end()}), oracle::diamond_apexes(m, e.tail, e.head));
            for (auto d : diamond_witnesses(g, e)) {
                ASSERT_EQ((std::set<std::size_t>{d.t, d.u, d.v, d.w}).size(), 4u);
                ASSERT_TRUE(g.has_edge(d.t, d.u) && g.has_edge(d.u, d.w) && g.has_edge(d.t, d.v) && g.has_edge(d.v, d.w));
            }
        }
        ASSERT_EQ(any_base, has_transitive_triangle(g));
    }
}

TEST(StructureProperties, StrongConnectivityMatchesWalkableNeighborhoods)
{
    std::mt19937_64 rng{0x5eed0102};
    for (int trial = 0; trial < 400; ++trial) {
        auto n = 1 + rng() % 8;
        auto g = oracle::random_graph(n, 0.3 + 0.1 * (trial % 6), rng);
        auto everywhere = true;
        for (VertexId u = 0; u < n; ++u)
            everywhere = everywhere && walkable_neighborhood(g, u).size() == n;
        ASSERT_EQ(is_strongly_connected(g), everywhere);
        ASSERT_EQ(is_strongly_connected(g), oracle::strongly_connected(oracle::from_graph(g)));
    }
}

TEST(StructureProperties, NoSatisfactoryVertexImpliesCycle)
{
    std::mt19937_64 rng{0x5eed0103};
    for (int trial = 0; trial < 500; ++trial) {
        auto g = oracle::random_graph(1 + rng() % 9, 0.6, rng);
        if (satisfactory_vertices(g).empty())
            ASSERT_TRUE(has_directed_cycle(g));
        if (! has_directed_cycle(g))
            ASSERT_FALSE(satisfactory_vertices(g).empty());
    }
}

TEST(StructureProperties, TriangleFreeMinOutdegreeIsSatisfactory)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = random_triangle_free(4 + seed % 10, 0.3, seed, 100000);
        ASSERT_FALSE(has_transitive_triangle(g));
        ASSERT_TRUE(profile(g, min_outdegree_vertex(g)).satisfactory);
    }
}
