#ifndef REACHCOUNT_CONDENSATION_HPP_
#define REACHCOUNT_CONDENSATION_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "digraph.hpp"

namespace reachcount {

template <typename Value>
struct condensation {
    digraph dag;
    // Vertex -> component id. Ids follow reverse topological order of `dag`.
    std::vector<vertex_id> pi;
    std::vector<std::size_t> component_sizes;
    std::vector<Value> aggregated_weights;
};

// Tarjan's algorithm in Pearce's single-array form, with an explicit call
// stack. rindex holds the DFS index while a vertex is open and a component
// number (counting down from n - 1) once it is assigned, so one n-sized array
// replaces index, lowlink and component. Returns the component of every
// vertex and the number of components; components are numbered in the order
// they are completed, i.e. sinks first.
inline std::pair<std::vector<vertex_id>, std::size_t> strongly_connected_components(const digraph &g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return {{}, 0};
    std::vector<vertex_id> rindex(n, 0);
    std::vector<bool> root(n, false);
    std::vector<vertex_id> scc_stack;
    std::vector<std::pair<vertex_id, vertex_id>> call_stack;  // (vertex, next out-edge offset)
    vertex_id index = 1;
    vertex_id c = static_cast<vertex_id>(n - 1);
    std::size_t k = 0;

    auto open = [&](vertex_id v) {
        rindex[v] = index++;
        root[v] = true;
        call_stack.emplace_back(v, 0);
    };

    for (vertex_id start = 0; start < n; ++start) {
        if (rindex[start] != 0) continue;
        open(start);
        while (!call_stack.empty()) {
            auto &[v, next] = call_stack.back();
            auto succ = g.out(v);
            if (next < succ.size()) {
                vertex_id w = succ[next];
                if (rindex[w] == 0) {
                    open(w);  // invalidates v and next; w is finished on return below
                    continue;
                }
                if (rindex[w] < rindex[v]) {
                    rindex[v] = rindex[w];
                    root[v] = false;
                }
                ++next;
                continue;
            }

            const vertex_id done = v;
            call_stack.pop_back();
            if (root[done]) {
                --index;
                while (!scc_stack.empty() && rindex[done] <= rindex[scc_stack.back()]) {
                    rindex[scc_stack.back()] = c;
                    scc_stack.pop_back();
                    --index;
                }
                rindex[done] = c--;
                ++k;
            } else {
                scc_stack.push_back(done);
            }
            if (!call_stack.empty()) {
                // Finish the parent's edge to `done`.
                auto &[parent, pnext] = call_stack.back();
                if (rindex[done] < rindex[parent]) {
                    rindex[parent] = rindex[done];
                    root[parent] = false;
                }
                ++pnext;
            }
        }
    }

    for (auto &x : rindex) x = static_cast<vertex_id>(n - 1 - x);
    return {std::move(rindex), k};
}

// Contracts every strongly connected component; the weight of a component is
// the sum of its members' weights.
template <typename Value>
condensation<Value> condense(const digraph &g, std::span<const Value> weights) {
    if (weights.size() != g.num_vertices())
        throw index_mismatch("weighting does not match vertex count");
    auto [pi, k] = strongly_connected_components(g);

    std::vector<std::size_t> sizes(k, 0);
    std::vector<Value> aggregated(k, Value{});
    for (vertex_id v = 0; v < g.num_vertices(); ++v) {
        ++sizes[pi[v]];
        aggregated[pi[v]] += weights[v];
    }

    // Members of component c are members[start[c] .. start[c + 1]).
    std::vector<std::size_t> start(k + 1, 0);
    for (vertex_id c = 0; c < k; ++c) start[c + 1] = start[c] + sizes[c];
    std::vector<vertex_id> members(g.num_vertices());
    {
        std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
        for (vertex_id v = 0; v < g.num_vertices(); ++v) members[cursor[pi[v]]++] = v;
    }

    // Parallel condensed edges are filtered with a stamp per source component.
    constexpr vertex_id none = std::numeric_limits<vertex_id>::max();
    std::vector<vertex_id> seen(k, none);
    std::vector<edge> dag_edges;
    for (vertex_id c = 0; c < k; ++c) {
        for (std::size_t i = start[c]; i < start[c + 1]; ++i) {
            vertex_id u = members[i];
            for (vertex_id v : g.out(u)) {
                vertex_id d = pi[v];
                if (d == c || seen[d] == c) continue;
                seen[d] = c;
                dag_edges.push_back({c, d});
            }
        }
    }
    return {digraph(digraph::trusted, k, std::move(dag_edges)), std::move(pi), std::move(sizes), std::move(aggregated)};
}

// values[v] = condensed[pi[v]].
template <typename Value>
std::vector<Value> lift(std::span<const Value> condensed, std::span<const vertex_id> pi) {
    std::vector<Value> lifted;
    lifted.reserve(pi.size());
    for (vertex_id c : pi) {
        if (c >= condensed.size())
            throw index_mismatch("component " + std::to_string(c) + " has no condensed value (" +
                                 std::to_string(condensed.size()) + " available)");
        lifted.push_back(condensed[c]);
    }
    return lifted;
}

} // namespace reachcount

#endif
