#ifndef REACHCOUNT_TESTS_TEST_SUPPORT_HPP_
#define REACHCOUNT_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <reachcount/reachcount.hpp>

namespace reachcount::testing {

inline digraph path3() { return digraph(3, {{0, 1}, {1, 2}}); }
inline digraph cycle3() { return digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline digraph cycle3_tail() { return digraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }
inline digraph diamond() { return digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Acyclic instances with long paths: a random recursive tree whose edges
// point from the older to the newer vertex (or the reverse, when `inward`),
// plus f extra edges that respect vertex order. Reachability sets are large,
// so boundary sets and masks are non-trivial.
inline digraph deep_dag(std::size_t n, std::size_t f, std::uint64_t seed, bool inward = false) {
    std::mt19937_64 rng(seed);
    std::vector<edge> edges;
    std::set<std::pair<vertex_id, vertex_id>> present;
    for (vertex_id v = 1; v < n; ++v) {
        vertex_id parent = std::uniform_int_distribution<vertex_id>(0, v - 1)(rng);
        edges.push_back({parent, v});
        present.insert({parent, v});
    }
    const std::size_t capacity = n < 2 ? 0 : n * (n - 1) / 2 - (n - 1);
    f = std::min(f, capacity);
    std::uniform_int_distribution<vertex_id> pick(0, static_cast<vertex_id>(n - 1));
    while (edges.size() < n - 1 + f) {
        vertex_id a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (present.insert({a, b}).second) edges.push_back({a, b});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    if (inward)
        for (auto &e : edges) std::swap(e.source, e.target);
    return digraph(n, std::move(edges));
}

inline std::vector<std::uint64_t> ones(std::size_t n) { return std::vector<std::uint64_t>(n, 1); }

} // namespace reachcount::testing

#endif
