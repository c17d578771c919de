#include "oracles.hh"

#include <snc/errors.hh>
#include <snc/generators.hh>
#include <snc/structure.hh>

#include <gtest/gtest.h>

using namespace snc;

TEST(Rng, BelowStaysInRangeAndCoversIt)
{
    Rng rng{42};
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
        auto x = rng.below(7);
        ASSERT_LT(x, 7u);
        ++hits[x];
    }
    for (auto h : hits)
        EXPECT_GT(h, 800);
}

TEST(Rng, PinnedStream)
{
    // mt19937_64's 10000th output for the default seed is fixed by the standard.
    Rng rng{5489u};
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i)
        x = rng.next();
    EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(DeriveSeed, DistinctStreams)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i)
        seen.insert(derive_seed(7, i));
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
}

TEST(RandomTournament, Examples)
{
    auto g = random_tournament(5, 123);
    EXPECT_EQ(g.edge_count(), 10u);
    for (VertexId u = 0; u < 5; ++u)
        for (VertexId v = u + 1; v < 5; ++v)
            EXPECT_NE(g.has_edge(u, v), g.has_edge(v, u));
    EXPECT_EQ(random_tournament(1, 9).vertex_count(), 1u);
    EXPECT_EQ(random_tournament(5, 123), g);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        EXPECT_FALSE(satisfactory_vertices(random_tournament(12, seed)).empty());
}

TEST(RandomDigonFree, Examples)
{
    EXPECT_EQ(random_digon_free(8, 0.0, 1).edge_count(), 0u);
    EXPECT_EQ(random_digon_free(8, 1.0, 1).edge_count(), 28u);
    EXPECT_EQ(random_digon_free(10, 0.4, 77), random_digon_free(10, 0.4, 77));
    for (double p : {-0.1, 1.5, std::numeric_limits<double>::quiet_NaN()}) {
        try {
            random_digon_free(4, p, 1);
            FAIL();
        }
        catch (const Error & e) {
            EXPECT_EQ(e.kind(), ErrorKind::invalid_probability);
        }
    }
}

TEST(RandomAcyclic, Examples)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_acyclic(1 + seed % 12, 0.1 + 0.008 * static_cast<double>(seed), seed);
        EXPECT_FALSE(has_directed_cycle(g));
        auto has_sink = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            has_sink = has_sink || g.out_degree(v) == 0;
        EXPECT_TRUE(has_sink);
    }
    auto t = random_acyclic(3, 1.0, 5);
    EXPECT_EQ(t.edge_count(), 3u);
    EXPECT_TRUE(has_transitive_triangle(t));
    EXPECT_THROW(random_acyclic(3, 2.0, 5), Error);
}

TEST(RandomTriangleFree, Examples)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = random_triangle_free(3, 0.2, seed, 1000);
        EXPECT_FALSE(has_transitive_triangle(g));
        EXPECT_TRUE(profile(g, min_outdegree_vertex(g)).satisfactory);
    }
    EXPECT_EQ(random_triangle_free(6, 0.0, 3, 1).edge_count(), 0u);
}

TEST(RandomTriangleFree, RetriesExhausted)
{
    // A tournament on 8 vertices always has a transitive triangle.
    try {
        random_triangle_free(8, 1.0, 1, 25);
        FAIL();
    }
    catch (const RetriesExhausted & e) {
        EXPECT_EQ(e.kind(), ErrorKind::retries_exhausted);
        EXPECT_EQ(e.attempts(), 25u);
    }
}
