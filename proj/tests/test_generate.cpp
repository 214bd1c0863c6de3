#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace reachcount;

TEST(Generate, EdgeCountMatchesFeedbackNumber) {
    digraph g = generate_bounded_feedback_digraph(10, 3, 99, generation_mode::general);
    EXPECT_EQ(g.num_edges(), 12u);
    EXPECT_EQ(feedback_edge_number(g), 3u);
}

TEST(Generate, SingleVertex) {
    digraph g = generate_bounded_feedback_digraph(1, 0, 7, generation_mode::acyclic);
    EXPECT_EQ(g.num_vertices(), 1u);
    EXPECT_EQ(g.num_edges(), 0u);
}

TEST(Generate, AcyclicModeIsAcyclic) {
    digraph g = generate_bounded_feedback_digraph(50, 5, 42, generation_mode::acyclic);
    EXPECT_NO_THROW(topological_order(g));
    EXPECT_EQ(feedback_edge_number(g), 5u);
}

TEST(Generate, Deterministic) {
    for (auto mode : {generation_mode::acyclic, generation_mode::general}) {
        EXPECT_EQ(generate_bounded_feedback_digraph(200, 9, 3, mode), generate_bounded_feedback_digraph(200, 9, 3, mode));
        EXPECT_NE(generate_bounded_feedback_digraph(200, 9, 3, mode), generate_bounded_feedback_digraph(200, 9, 4, mode));
    }
}

TEST(Generate, Infeasible) {
    EXPECT_THROW(generate_bounded_feedback_digraph(0, 0, 1, generation_mode::general), infeasible_parameters);
    EXPECT_THROW(generate_bounded_feedback_digraph(1, 1, 1, generation_mode::general), infeasible_parameters);
    // 3 vertices: 6 ordered pairs, 3 acyclic ones, 2 used by the tree.
    EXPECT_NO_THROW(generate_bounded_feedback_digraph(3, 4, 1, generation_mode::general));
    EXPECT_THROW(generate_bounded_feedback_digraph(3, 5, 1, generation_mode::general), infeasible_parameters);
    EXPECT_NO_THROW(generate_bounded_feedback_digraph(3, 1, 1, generation_mode::acyclic));
    EXPECT_THROW(generate_bounded_feedback_digraph(3, 2, 1, generation_mode::acyclic), infeasible_parameters);
}

TEST(Generate, PropertiesHoldAcrossParameters) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 120)(rng);
        auto mode = trial % 2 ? generation_mode::general : generation_mode::acyclic;
        std::size_t f = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
        f = std::min<std::size_t>(f, extra_edge_capacity(n, mode));
        digraph g = generate_bounded_feedback_digraph(n, f, rng(), mode);
        ASSERT_EQ(g.num_vertices(), n);
        EXPECT_EQ(g.num_edges(), n - 1 + f);
        EXPECT_EQ(weakly_connected_components(g), 1u);
        EXPECT_EQ(feedback_edge_number(g), f);
        if (mode == generation_mode::acyclic) {
            EXPECT_NO_THROW(topological_order(g));
        }
    }
}

TEST(Generate, DenseRequestsFillCapacity) {
    for (auto mode : {generation_mode::acyclic, generation_mode::general}) {
        std::size_t n = 12;
        std::size_t f = extra_edge_capacity(n, mode);
        digraph g = generate_bounded_feedback_digraph(n, f, 5, mode);
        EXPECT_EQ(feedback_edge_number(g), f);
    }
}

TEST(Generate, LargeSparse) {
    digraph g = generate_bounded_feedback_digraph(1 << 17, 8, 1, generation_mode::general);
    EXPECT_EQ(g.num_edges(), (1u << 17) + 7);
    EXPECT_EQ(feedback_edge_number(g), 8u);
}
