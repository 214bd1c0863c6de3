#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace reachcount;
using namespace reachcount::testing;

TEST(ParseEdgeList, Path) {
    labeled_graph lg = parse_edge_list("0 1\n1 2\n");
    EXPECT_EQ(lg.graph, path3());
    EXPECT_EQ(lg.labels, (std::vector<std::uint64_t>{0, 1, 2}));
}

TEST(ParseEdgeList, HeaderDeclaresIsolatedVertices) {
    labeled_graph lg = parse_edge_list("# comment\np 4 2\n0 1\n2 3\n");
    EXPECT_EQ(lg.graph.num_vertices(), 4u);
    EXPECT_EQ(lg.graph.num_edges(), 2u);
    EXPECT_EQ(weakly_connected_components(lg.graph), 2u);

    labeled_graph isolated = parse_edge_list("p 5 1\n3 1\n");
    EXPECT_EQ(isolated.graph.num_vertices(), 5u);
    EXPECT_EQ(isolated.graph, digraph(5, {{3, 1}}));
}

TEST(ParseEdgeList, FirstAppearanceRemap) {
    labeled_graph lg = parse_edge_list("10 7\n7 42\n\n42 10\n");
    EXPECT_EQ(lg.labels, (std::vector<std::uint64_t>{10, 7, 42}));
    EXPECT_EQ(lg.graph, digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
    EXPECT_EQ(lg.id_of.at(42), 2u);
}

TEST(ParseEdgeList, Duplicate) {
    EXPECT_THROW(parse_edge_list("0 1\n0 1\n"), duplicate_edge);
    EXPECT_THROW(parse_edge_list("3 3\n"), self_loop);
}

TEST(ParseEdgeList, DedupeDropsWithWarnings) {
    labeled_graph lg = parse_edge_list("0 1\n0 1\n1 1\n1 2\n", {.dedupe = true});
    EXPECT_EQ(lg.graph, path3());
    EXPECT_EQ(lg.warnings.size(), 2u);
}

TEST(ParseEdgeList, Malformed) {
    auto line_of = [](std::string_view text) {
        try {
            parse_edge_list(text);
        } catch (const parse_error &e) {
            return e.line;
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("0 1\n1\n"), 2u);
    EXPECT_EQ(line_of("0 1\n1 x\n"), 2u);
    EXPECT_EQ(line_of("0 -1\n"), 1u);
    EXPECT_EQ(line_of("0 1 2\n"), 1u);
    EXPECT_EQ(line_of("0 1\np 2 1\n"), 2u);
    EXPECT_EQ(line_of("p 2 1\n0 2\n"), 2u);
    EXPECT_EQ(line_of("p 3\n"), 1u);
    EXPECT_NE(line_of("p 3 2\n0 1\n"), 0u);
}

TEST(ParseEdgeList, SerializeRoundTrip) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 80)(rng);
        std::size_t f = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
        auto mode = trial % 2 ? generation_mode::general : generation_mode::acyclic;
        f = std::min<std::size_t>(f, extra_edge_capacity(n, mode));
        digraph g = generate_bounded_feedback_digraph(n, f, rng(), mode);
        EXPECT_EQ(parse_edge_list(serialize(g)).graph, g);
    }
}

TEST(ParseWeights, DefaultsAndLabels) {
    labeled_graph lg = parse_edge_list("10 7\n7 42\n");
    std::istringstream in("# w\n42 2.5\n10 -1e-3\n");
    vertex_weighting a = parse_weights(in, lg);
    EXPECT_EQ(a, (vertex_weighting{-1e-3, 1.0, 2.5}));
}

TEST(ParseWeights, Errors) {
    labeled_graph lg = parse_edge_list("0 1\n");
    std::istringstream unknown("5 1.0\n");
    EXPECT_THROW(parse_weights(unknown, lg), parse_error);
    std::istringstream twice("0 1\n0 2\n");
    EXPECT_THROW(parse_weights(twice, lg), parse_error);
    std::istringstream bad("0 abc\n");
    EXPECT_THROW(parse_weights(bad, lg), parse_error);
}

TEST(WriteValues, Formats) {
    std::ostringstream ints;
    std::vector<std::uint64_t> labels{5, 9};
    write_values(ints, labels, std::vector<std::uint64_t>{3, 1});
    EXPECT_EQ(ints.str(), "5 3\n9 1\n");

    std::ostringstream reals;
    write_values(reals, labels, std::vector<double>{1.0 / 3.0, -2.5});
    EXPECT_EQ(reals.str(), "5 0.333333333333\n9 -2.5\n");
}
