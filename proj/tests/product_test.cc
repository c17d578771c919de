#include "fixtures.hh"
#include "oracles.hh"

#include <snc/errors.hh>
#include <snc/product.hh>
#include <snc/structure.hh>

#include <gtest/gtest.h>

#include <random>

using namespace snc;
using namespace snc::fixtures;

TEST(ProductLabeling, RowMajorBijection)
{
    ProductLabeling l{4, 3};
    EXPECT_EQ(l.size(), 12u);
    EXPECT_EQ(l.encode(2, 1), 7u);
    EXPECT_EQ(l.decode(7), (std::pair<VertexId, VertexId>{2, 1}));
    for (VertexId v = 0; v < l.size(); ++v) {
        auto [d, h] = l.decode(v);
        EXPECT_EQ(l.encode(d, h), v);
    }
    EXPECT_THROW(l.encode(4, 0), GraphError);
    EXPECT_THROW(l.decode(12), GraphError);
}

TEST(ValidSecondFactor, Examples)
{
    EXPECT_TRUE(is_valid_second_factor(c3()));
    EXPECT_TRUE(is_valid_second_factor(single_vertex()));
    EXPECT_FALSE(is_valid_second_factor(Digraph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}})));
    for (std::size_t n = 3; n <= 12; ++n)
        EXPECT_TRUE(is_valid_second_factor(cycle(n)));
}

TEST(BuildProduct, Examples)
{
    auto p = build_product(c3(), single_vertex());
    EXPECT_EQ(p.graph, c3());

    auto q = build_product(single_vertex(), c3());
    EXPECT_EQ(q.graph, c3());

    auto r = build_product(c3(), c3());
    EXPECT_EQ(r.graph.vertex_count(), 9u);
    EXPECT_EQ(r.graph.edge_count(), 36u);
    std::size_t total = 0;
    for (VertexId v = 0; v < 9; ++v) {
        EXPECT_EQ(r.graph.out_degree(v), 4u);
        total += r.graph.out_degree(v);
    }
    EXPECT_EQ(total, r.graph.edge_count());
}

TEST(PredictedProfile, Examples)
{
    for (VertexId d = 0; d < 3; ++d)
        for (VertexId h = 0; h < 3; ++h)
            EXPECT_EQ(predicted_profile(c3(), c3(), d, h), (PredictedProfile{4, 4, 0}));
    EXPECT_EQ(predicted_profile(c3(), single_vertex(), 1, 0), (PredictedProfile{1, 1, 0}));
    for (VertexId d = 0; d < 4; ++d)
        for (VertexId h = 0; h < 3; ++h)
            EXPECT_EQ(predicted_profile(cycle(4), c3(), d, h), (PredictedProfile{4, 4, 0}));
    EXPECT_THROW(predicted_profile(c3(), c3(), 3, 0), GraphError);
}

TEST(PredictedProfile, FrozenValuesMatchOracleBfs)
{
    // The frozen (4, 4, 0) values above, re-derived from Floyd-Warshall on the
    // built products.
    for (auto d : {c3(), cycle(4)}) {
        auto m = oracle::from_graph(build_product(d, c3()).graph);
        for (VertexId v = 0; v < m.n; ++v) {
            EXPECT_EQ(oracle::layer(m, v, 1).size(), 4u);
            EXPECT_EQ(oracle::layer(m, v, 2).size(), 4u);
        }
    }
}

TEST(ProductProperties, FormulaExactAndAdditive)
{
    std::mt19937_64 rng{0x5eed0301};
    for (int trial = 0; trial < 150; ++trial) {
        auto d = oracle::random_graph(1 + rng() % 8, 0.2 + 0.1 * (trial % 7), rng);
        auto h = oracle::random_graph(1 + rng() % 8, 0.2 + 0.1 * ((trial / 7) % 7), rng);
        auto product = build_product(d, h);
        ASSERT_EQ(product.graph.vertex_count(), d.vertex_count() * h.vertex_count());
        for (VertexId v = 0; v < product.graph.vertex_count(); ++v) {
            auto [dv, hv] = product.labeling.decode(v);
            auto measured = profile(product.graph, v);
            auto predicted = predicted_profile(d, h, dv, hv);
            ASSERT_EQ(measured.n1, predicted.n1);
            ASSERT_EQ(measured.n2, predicted.n2);
            ASSERT_EQ(measured.anti_satisfaction,
                profile(h, hv).anti_satisfaction + static_cast<long>(h.vertex_count()) * profile(d, dv).anti_satisfaction);
        }
    }
}

TEST(ProductProperties, StrongConnectivityInherited)
{
    std::mt19937_64 rng{0x5eed0302};
    for (int trial = 0; trial < 100; ++trial) {
        auto d = oracle::random_strongly_connected(3 + rng() % 6, 0.3, rng);
        auto h = oracle::random_graph(1 + rng() % 6, 0.4, rng);
        ASSERT_TRUE(is_strongly_connected(d));
        ASSERT_TRUE(is_strongly_connected(build_product(d, h).graph));
    }
}

TEST(ProductProperties, SingleVertexDReturnsHUnchanged)
{
    // With one copy the product is H itself, strongly connected or not.
    auto h = transitive_triangle();
    auto p = build_product(single_vertex(), h);
    EXPECT_EQ(p.graph, h);
    EXPECT_FALSE(is_strongly_connected(p.graph));
}

TEST(ProductProperties, PositiveAntiSatisfactionPropagates)
{
    // Never triggered at this scale: no D has all-positive anti-satisfaction.
    std::mt19937_64 rng{0x5eed0303};
    for (int trial = 0; trial < 100; ++trial) {
        auto d = oracle::random_graph(1 + rng() % 6, 0.7, rng);
        auto h = cycle(3 + rng() % 4);
        auto ps = profiles(d);
        auto all_positive = std::all_of(ps.begin(), ps.end(), [](auto & p) { return p.anti_satisfaction > 0; });
        if (all_positive && is_valid_second_factor(h))
            for (auto & p : profiles(build_product(d, h).graph))
                ASSERT_GT(p.anti_satisfaction, 0);
        ASSERT_FALSE(all_positive);
    }
}
