#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace reachcount;
using namespace reachcount::testing;

TEST(OracleSet, Examples) {
    EXPECT_EQ(oracle::reachability_set(path3(), 0), (std::vector<vertex_id>{0, 1, 2}));
    EXPECT_EQ(oracle::reachability_set(path3(), 2), (std::vector<vertex_id>{2}));
    for (vertex_id v = 0; v < 3; ++v) EXPECT_EQ(oracle::reachability_set(cycle3(), v), (std::vector<vertex_id>{0, 1, 2}));
}

TEST(OracleCounts, Examples) {
    EXPECT_EQ(oracle::reachability_counts(path3()), (std::vector<std::uint64_t>{3, 2, 1}));
    EXPECT_EQ(oracle::reachability_counts(cycle3_tail()), (std::vector<std::uint64_t>{4, 4, 4, 1}));
    EXPECT_EQ(oracle::reachability_counts(diamond()), (std::vector<std::uint64_t>{4, 2, 2, 1}));
}

TEST(OracleCounts, AgreesWithSetsAndSinks) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        std::size_t f = std::min<std::size_t>(6, extra_edge_capacity(n, generation_mode::general));
        digraph g = generate_bounded_feedback_digraph(n, f, rng(), generation_mode::general);
        auto counts = oracle::reachability_counts(g);
        auto c = condense<std::uint64_t>(g, ones(n));
        for (vertex_id v = 0; v < n; ++v) {
            EXPECT_EQ(counts[v], oracle::reachability_set(g, v).size());
            EXPECT_GE(counts[v], 1u);
            EXPECT_LE(counts[v], n);
            bool sink_singleton = c.dag.out_degree(c.pi[v]) == 0 && c.component_sizes[c.pi[v]] == 1;
            EXPECT_EQ(counts[v] == 1, sink_singleton);
        }
    }
}

TEST(OracleWeighted, SumsOverReachSet) {
    std::vector<double> a{1.5, -2.0, 0.25, 4.0};
    auto r = oracle::reachability<double>(cycle3_tail(), a);
    EXPECT_DOUBLE_EQ(r[0], 3.75);
    EXPECT_DOUBLE_EQ(r[3], 4.0);
}
