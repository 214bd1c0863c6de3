#ifndef REACHCOUNT_FOREST_HPP_
#define REACHCOUNT_FOREST_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "digraph.hpp"

namespace reachcount {

// A spanning polyforest of g together with the edges left out of it.
struct feedback_decomposition_t {
    digraph forest;
    std::vector<edge> removed;
};

// Scans g's edges in input order; an edge joining two different weak
// components goes to the forest, every other edge is removed.
inline feedback_decomposition_t feedback_decomposition(const digraph &g) {
    union_find uf(g.num_vertices());
    std::vector<edge> kept;
    std::vector<edge> removed;
    kept.reserve(g.num_edges());
    for (const auto &e : g.edges()) {
        if (uf.unite(e.source, e.target))
            kept.push_back(e);
        else
            removed.push_back(e);
    }
    return {digraph(digraph::trusted, g.num_vertices(), std::move(kept)), std::move(removed)};
}

enum class topo_method { dfs, kahn };

// Every edge goes from an earlier to a later position. Throws cyclic_graph.
inline std::vector<vertex_id> topological_order(const digraph &g, topo_method method = topo_method::dfs) {
    const std::size_t n = g.num_vertices();
    std::vector<vertex_id> order;
    order.reserve(n);

    if (method == topo_method::kahn) {
        std::vector<std::size_t> indegree(n);
        for (vertex_id v = 0; v < n; ++v) indegree[v] = g.in_degree(v);
        for (vertex_id v = 0; v < n; ++v)
            if (indegree[v] == 0) order.push_back(v);
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (vertex_id w : g.out(order[head]))
                if (--indegree[w] == 0) order.push_back(w);
        }
        if (order.size() != n) throw cyclic_graph();
        return order;
    }

    // Iterative DFS; reversed postorder.
    enum : unsigned char { white, grey, black };
    std::vector<unsigned char> colour(n, white);
    std::vector<std::pair<vertex_id, std::size_t>> stack;
    for (vertex_id root = 0; root < n; ++root) {
        if (colour[root] != white) continue;
        colour[root] = grey;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto &[v, next] = stack.back();
            auto succ = g.out(v);
            if (next < succ.size()) {
                vertex_id w = succ[next++];
                if (colour[w] == grey) throw cyclic_graph();
                if (colour[w] == white) {
                    colour[w] = grey;
                    stack.emplace_back(w, 0);
                }
            } else {
                colour[v] = black;
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    return {order.rbegin(), order.rend()};
}

namespace detail {

// r[v] = a(v) + sum of r over v's children, visiting `order` back to front.
// An empty order means the ids themselves are reverse topological. The caller
// guarantees that t is a polyforest.
template <typename Value>
std::vector<Value> accumulate_reachability(const digraph &t, std::span<const Value> weights,
                                           std::span<const vertex_id> order) {
    std::vector<Value> r(t.num_vertices());
    auto visit = [&](vertex_id v) {
        Value sum = weights[v];
        for (vertex_id w : t.out(v)) sum += r[w];
        r[v] = sum;
    };
    if (order.empty()) {
        for (vertex_id v = 0; v < t.num_vertices(); ++v) visit(v);
    } else {
        for (auto it = order.rbegin(); it != order.rend(); ++it) visit(*it);
    }
    return r;
}

} // namespace detail

// Reachability on a polyforest: r(v) = a_v + sum of r(w) over out-neighbours w,
// evaluated in reverse topological order. Sound only because the subtrees
// below distinct out-neighbours are disjoint, so the precondition is checked.
//
// `order` may supply a precomputed topological order of t.
template <typename Value>
std::vector<Value> polyforest_reachability(const digraph &t, std::span<const Value> weights,
                                           std::optional<std::span<const vertex_id>> order = std::nullopt) {
    if (weights.size() != t.num_vertices())
        throw index_mismatch("weighting has " + std::to_string(weights.size()) + " entries for " +
                             std::to_string(t.num_vertices()) + " vertices");
    if (std::size_t f = feedback_edge_number(t); f != 0) throw not_a_forest(f);

    std::vector<vertex_id> computed;
    if (!order) {
        computed = topological_order(t);
        order = computed;
    }
    return detail::accumulate_reachability<Value>(t, weights, *order);
}

} // namespace reachcount

#endif
