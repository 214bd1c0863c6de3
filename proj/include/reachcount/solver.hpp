#ifndef REACHCOUNT_SOLVER_HPP_
#define REACHCOUNT_SOLVER_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "condensation.hpp"
#include "digraph.hpp"
#include "incremental.hpp"

namespace reachcount {

template <typename Value>
struct solution {
    std::vector<Value> values;
    std::size_t feedback_input = 0;
    std::size_t feedback_condensed = 0;
    std::size_t condensed_vertices = 0;
    std::vector<round_diagnostics> rounds;
    double condense_ms = 0.0;
    double decompose_ms = 0.0;
    double forest_ms = 0.0;
    double rounds_ms = 0.0;
    double lift_ms = 0.0;
    double total_ms = 0.0;
};

// General digraphs: condense, solve the condensation, and read every vertex's
// value off its component.
template <typename Value>
solution<Value> solve(const digraph &g, std::span<const Value> weights, const acyclic_options &options = {},
                      const round_observer<Value> &observer = {}) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t) {
        return std::chrono::duration<double, std::milli>(clock::now() - t).count();
    };
    const auto started = clock::now();
    solution<Value> out;
    out.feedback_input = feedback_edge_number(g);

    auto t0 = clock::now();
    condensation<Value> c = condense<Value>(g, weights);
    out.condense_ms = ms_since(t0);
    out.condensed_vertices = c.dag.num_vertices();

    acyclic_solution<Value> acyclic = solve_acyclic<Value>(c.dag, c.aggregated_weights, options, observer);
    out.feedback_condensed = acyclic.removed.size();
    out.rounds = std::move(acyclic.rounds);
    out.decompose_ms = acyclic.decompose_ms;
    out.forest_ms = acyclic.forest_ms;
    out.rounds_ms = acyclic.rounds_ms;

    t0 = clock::now();
    out.values = lift<Value>(acyclic.values, c.pi);
    out.lift_ms = ms_since(t0);
    out.total_ms = ms_since(started);
    return out;
}

// Number of vertices reachable from each vertex, itself included. Exact.
inline std::vector<std::uint64_t> count_reachable(const digraph &g) {
    std::vector<std::uint64_t> ones(g.num_vertices(), 1);
    return solve<std::uint64_t>(g, ones).values;
}

// Total weight of the vertices reachable from each vertex, itself included.
inline std::vector<double> weighted_reachability(const digraph &g, const vertex_weighting &a) {
    return solve<double>(g, a).values;
}

} // namespace reachcount

#endif
