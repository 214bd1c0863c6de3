#ifndef REACHCOUNT_ORACLE_HPP_
#define REACHCOUNT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "digraph.hpp"

// Brute-force reachability: one breadth-first search per source, each with a
// fresh visited array, O(n(n + m)) overall. Serves as the naive baseline and
// as ground truth for the tests. Shares no traversal code with the solvers.
namespace reachcount::oracle {

// Sorted ascending.
inline std::vector<vertex_id> reachability_set(const digraph &g, vertex_id v) {
    std::vector<bool> visited(g.num_vertices(), false);
    std::deque<vertex_id> queue{v};
    visited[v] = true;
    while (!queue.empty()) {
        vertex_id u = queue.front();
        queue.pop_front();
        for (vertex_id w : g.out(u)) {
            if (!visited[w]) {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<vertex_id> result;
    for (vertex_id u = 0; u < g.num_vertices(); ++u)
        if (visited[u]) result.push_back(u);
    return result;
}

// values[v] = sum of weights over R(v), for every v.
template <typename Value>
std::vector<Value> reachability(const digraph &g, std::span<const Value> weights) {
    const std::size_t n = g.num_vertices();
    std::vector<Value> values(n);
    std::vector<unsigned char> visited;
    std::vector<vertex_id> queue;
    queue.reserve(n);
    for (vertex_id source = 0; source < n; ++source) {
        visited.assign(n, 0);
        queue.clear();
        queue.push_back(source);
        visited[source] = 1;
        Value total = weights[source];
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (vertex_id w : g.out(queue[head])) {
                if (visited[w]) continue;
                visited[w] = 1;
                total += weights[w];
                queue.push_back(w);
            }
        }
        values[source] = total;
    }
    return values;
}

inline std::vector<std::uint64_t> reachability_counts(const digraph &g) {
    std::vector<std::uint64_t> ones(g.num_vertices(), 1);
    return reachability<std::uint64_t>(g, ones);
}

} // namespace reachcount::oracle

#endif
