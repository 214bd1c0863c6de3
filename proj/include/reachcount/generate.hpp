#ifndef REACHCOUNT_GENERATE_HPP_
#define REACHCOUNT_GENERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "digraph.hpp"

namespace reachcount {

enum class generation_mode { acyclic, general };

namespace detail {

// Uniform labelled tree on n >= 2 vertices, decoded from a random Pruefer
// sequence in linear time.
inline std::vector<std::pair<vertex_id, vertex_id>> random_tree(std::size_t n, std::mt19937_64 &rng) {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    if (n < 2) return edges;
    std::uniform_int_distribution<vertex_id> pick(0, static_cast<vertex_id>(n - 1));
    std::vector<vertex_id> code(n - 2);
    for (auto &c : code) c = pick(rng);

    std::vector<std::size_t> degree(n, 1);
    for (vertex_id c : code) ++degree[c];
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    std::size_t leaf = ptr;
    edges.reserve(n - 1);
    for (vertex_id v : code) {
        edges.emplace_back(static_cast<vertex_id>(leaf), v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(static_cast<vertex_id>(leaf), static_cast<vertex_id>(n - 1));
    return edges;
}

inline std::uint64_t pair_key(vertex_id u, vertex_id v) { return (std::uint64_t{u} << 32) | v; }

} // namespace detail

// Non-tree ordered pairs available to the extra edges.
inline std::uint64_t extra_edge_capacity(std::size_t n, generation_mode mode) {
    if (n < 2) return 0;
    const std::uint64_t pairs = std::uint64_t{n} * (n - 1);
    return (mode == generation_mode::acyclic ? pairs / 2 : pairs) - (n - 1);
}

// Weakly connected digraph with n - 1 + f edges, hence feedback edge number
// exactly f: a uniform random spanning tree, oriented, plus f distinct extra
// edges. In acyclic mode every edge respects one random vertex ranking.
// Edges are emitted in shuffled order. Deterministic in (n, f, seed, mode).
inline digraph generate_bounded_feedback_digraph(std::size_t n, std::size_t f, std::uint64_t seed,
                                                 generation_mode mode) {
    if (n == 0) throw infeasible_parameters("need at least one vertex");
    if (n > (std::size_t{1} << 31)) throw infeasible_parameters("too many vertices");
    const std::uint64_t capacity = extra_edge_capacity(n, mode);
    if (f > capacity)
        throw infeasible_parameters("f = " + std::to_string(f) + " exceeds the " + std::to_string(capacity) +
                                    " extra edges available for n = " + std::to_string(n));

    std::mt19937_64 rng(seed);
    std::vector<vertex_id> by_rank(n);
    std::iota(by_rank.begin(), by_rank.end(), vertex_id{0});
    std::shuffle(by_rank.begin(), by_rank.end(), rng);
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[by_rank[i]] = i;

    std::vector<edge> edges;
    edges.reserve(n - 1 + f);
    std::unordered_set<std::uint64_t> present;
    std::bernoulli_distribution coin(0.5);
    for (auto [a, b] : detail::random_tree(n, rng)) {
        bool forward = mode == generation_mode::acyclic ? rank[a] < rank[b] : coin(rng);
        edge e = forward ? edge{a, b} : edge{b, a};
        edges.push_back(e);
        present.insert(detail::pair_key(e.source, e.target));
    }

    // Dense requests enumerate every candidate; sparse ones use rejection.
    const bool enumerate = capacity <= 4096 || 2 * std::uint64_t{f} >= capacity;
    if (enumerate && f > 0) {
        std::vector<edge> candidates;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (mode == generation_mode::acyclic && i > j) continue;
                vertex_id u = by_rank[i], v = by_rank[j];
                if (!present.contains(detail::pair_key(u, v))) candidates.push_back({u, v});
            }
        }
        for (std::size_t k = 0; k < f; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, candidates.size() - 1);
            std::swap(candidates[k], candidates[pick(rng)]);
            edges.push_back(candidates[k]);
        }
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        while (edges.size() < n - 1 + f) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            if (mode == generation_mode::acyclic && i > j) std::swap(i, j);
            vertex_id u = by_rank[i], v = by_rank[j];
            if (present.insert(detail::pair_key(u, v)).second) edges.push_back({u, v});
        }
    }

    std::shuffle(edges.begin(), edges.end(), rng);
    return digraph(n, std::move(edges));
}

} // namespace reachcount

#endif
