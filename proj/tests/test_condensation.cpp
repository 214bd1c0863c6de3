#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "test_support.hpp"

using namespace reachcount;
using namespace reachcount::testing;

TEST(Condense, CycleWithTail) {
    auto c = condense<std::uint64_t>(cycle3_tail(), ones(4));
    EXPECT_EQ(c.dag.num_vertices(), 2u);
    EXPECT_EQ(c.dag.num_edges(), 1u);
    EXPECT_EQ(c.pi[0], c.pi[1]);
    EXPECT_EQ(c.pi[1], c.pi[2]);
    EXPECT_NE(c.pi[2], c.pi[3]);
    // Sink component first.
    EXPECT_EQ(c.pi[3], 0u);
    EXPECT_EQ(c.aggregated_weights, (std::vector<std::uint64_t>{1, 3}));
    EXPECT_EQ(c.component_sizes, (std::vector<std::size_t>{1, 3}));
}

TEST(Condense, DagIsIsomorphic) {
    digraph g = diamond();
    auto c = condense<std::uint64_t>(g, ones(4));
    EXPECT_EQ(c.dag.num_vertices(), 4u);
    std::set<vertex_id> distinct(c.pi.begin(), c.pi.end());
    EXPECT_EQ(distinct.size(), 4u);
    std::set<edge> mapped;
    for (const auto &e : g.edges()) mapped.insert({c.pi[e.source], c.pi[e.target]});
    EXPECT_EQ(mapped, std::set<edge>(c.dag.edges().begin(), c.dag.edges().end()));
}

TEST(Condense, DeduplicatesParallelEdges) {
    // Two 2-cycles joined by two edges in the same direction.
    digraph g(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {1, 3}});
    auto c = condense<std::uint64_t>(g, ones(4));
    EXPECT_EQ(c.dag.num_vertices(), 2u);
    EXPECT_EQ(c.dag.num_edges(), 1u);
}

TEST(Condense, InvariantsOnRandomGraphs) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
        std::size_t f = std::min<std::size_t>(8, extra_edge_capacity(n, generation_mode::general));
        digraph g = generate_bounded_feedback_digraph(n, f, rng(), generation_mode::general);
        std::vector<double> a(n);
        for (auto &x : a) x = std::uniform_real_distribution<double>(-3, 3)(rng);
        auto c = condense<double>(g, a);

        EXPECT_NO_THROW(topological_order(c.dag));
        EXPECT_LE(feedback_edge_number(c.dag), feedback_edge_number(g));
        EXPECT_NEAR(std::accumulate(c.aggregated_weights.begin(), c.aggregated_weights.end(), 0.0),
                    std::accumulate(a.begin(), a.end(), 0.0), 1e-9);

        // Same component iff mutually reachable.
        std::vector<std::vector<vertex_id>> reach(n);
        for (vertex_id v = 0; v < n; ++v) reach[v] = oracle::reachability_set(g, v);
        auto reaches = [&](vertex_id u, vertex_id v) { return std::ranges::binary_search(reach[u], v); };
        for (vertex_id u = 0; u < n; ++u)
            for (vertex_id v = 0; v < n; ++v)
                EXPECT_EQ(c.pi[u] == c.pi[v], reaches(u, v) && reaches(v, u));

        std::set<edge> expected;
        for (const auto &e : g.edges())
            if (c.pi[e.source] != c.pi[e.target]) expected.insert({c.pi[e.source], c.pi[e.target]});
        EXPECT_EQ(expected.size(), c.dag.num_edges());
        EXPECT_EQ(expected, std::set<edge>(c.dag.edges().begin(), c.dag.edges().end()));
    }
}

TEST(Condense, DenseGraphsAndSinkFirstIds) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 25)(rng);
        std::size_t cap = extra_edge_capacity(n, generation_mode::general);
        std::size_t f = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
        digraph g = generate_bounded_feedback_digraph(n, f, rng(), generation_mode::general);
        auto [pi, k] = strongly_connected_components(g);
        ASSERT_EQ(pi.size(), n);
        for (vertex_id c : pi) EXPECT_LT(c, k);
        for (vertex_id u = 0; u < n; ++u) {
            auto ru = oracle::reachability_set(g, u);
            for (vertex_id v = 0; v < n; ++v) {
                bool mutual = std::ranges::binary_search(ru, v) &&
                              std::ranges::binary_search(oracle::reachability_set(g, v), u);
                EXPECT_EQ(pi[u] == pi[v], mutual);
            }
        }
        auto c = condense<std::uint64_t>(g, ones(n));
        for (const auto &e : c.dag.edges()) EXPECT_GT(e.source, e.target);
    }
}

TEST(Condense, EmptyAndSingleton) {
    auto empty = condense<std::uint64_t>(digraph(0, {}), std::vector<std::uint64_t>{});
    EXPECT_EQ(empty.dag.num_vertices(), 0u);
    auto one = condense<std::uint64_t>(digraph(1, {}), ones(1));
    EXPECT_EQ(one.pi, (std::vector<vertex_id>{0}));
}

TEST(Condense, LongCycleIterative) {
    const std::size_t n = 200000;
    std::vector<edge> edges;
    for (vertex_id v = 0; v < n; ++v) edges.push_back({v, static_cast<vertex_id>((v + 1) % n)});
    auto c = condense<std::uint64_t>(digraph(n, std::move(edges)), ones(n));
    EXPECT_EQ(c.dag.num_vertices(), 1u);
    EXPECT_EQ(c.aggregated_weights[0], n);
}

TEST(Lift, CycleWithTail) {
    auto c = condense<std::uint64_t>(cycle3_tail(), ones(4));
    std::vector<std::uint64_t> condensed(2);
    condensed[c.pi[0]] = 4;
    condensed[c.pi[3]] = 1;
    EXPECT_EQ(lift<std::uint64_t>(condensed, c.pi), (std::vector<std::uint64_t>{4, 4, 4, 1}));
}

TEST(Lift, IdentityOnDag) {
    std::vector<vertex_id> pi{0, 1, 2, 3};
    std::vector<std::uint64_t> v{7, 5, 3, 1};
    EXPECT_EQ(lift<std::uint64_t>(v, pi), v);
}

TEST(Lift, TwoDisjointTwoCycles) {
    digraph g(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    auto c = condense<std::uint64_t>(g, ones(4));
    auto acyclic = polyforest_reachability<std::uint64_t>(c.dag, c.aggregated_weights);
    auto lifted = lift<std::uint64_t>(acyclic, c.pi);
    EXPECT_EQ(lifted, oracle::reachability_counts(g));
    EXPECT_EQ(lifted, (std::vector<std::uint64_t>{2, 2, 2, 2}));
}

TEST(Lift, IndexMismatch) {
    std::vector<vertex_id> pi{0, 3};
    std::vector<std::uint64_t> v{1, 1};
    EXPECT_THROW(lift<std::uint64_t>(v, pi), index_mismatch);
}
