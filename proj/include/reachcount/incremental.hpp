#ifndef REACHCOUNT_INCREMENTAL_HPP_
#define REACHCOUNT_INCREMENTAL_HPP_

#include <algorithm>
#include <cassert>
#include <bit>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "digraph.hpp"
#include "forest.hpp"

namespace reachcount {

using vertex_bitset = boost::dynamic_bitset<std::uint64_t>;

template <typename G>
concept traversable_graph = requires(const G &g, vertex_id v) {
    { g.num_vertices() } -> std::convertible_to<std::size_t>;
    g.for_each_out(v, [](vertex_id) {});
    g.for_each_in(v, [](vertex_id) {});
};

// A digraph that accepts edge insertions on top of an immutable base.
// Inserted edges live in per-vertex singly linked lists so that construction
// stays O(n + m) and each insertion is O(1).
class augmented_graph {
public:
    explicit augmented_graph(digraph base)
        : base_(std::move(base)), out_head_(base_.num_vertices(), nil), in_head_(base_.num_vertices(), nil) {}

    std::size_t num_vertices() const noexcept { return base_.num_vertices(); }
    std::size_t num_edges() const noexcept { return base_.num_edges() + added_.size(); }
    const digraph &base() const noexcept { return base_; }
    std::span<const edge> inserted() const noexcept { return added_; }

    template <typename Fn>
    void for_each_out(vertex_id v, Fn &&fn) const {
        for (vertex_id w : base_.out(v)) fn(w);
        for (auto i = out_head_[v]; i != nil; i = out_next_[i]) fn(added_[i].target);
    }
    template <typename Fn>
    void for_each_in(vertex_id v, Fn &&fn) const {
        for (vertex_id w : base_.in(v)) fn(w);
        for (auto i = in_head_[v]; i != nil; i = in_next_[i]) fn(added_[i].source);
    }

    bool has_edge(vertex_id u, vertex_id v) const noexcept {
        if (base_.has_edge(u, v)) return true;
        for (auto i = out_head_[u]; i != nil; i = out_next_[i])
            if (added_[i].target == v) return true;
        return false;
    }

    void insert(edge e) {
        const auto n = num_vertices();
        if (e.source >= n) throw vertex_out_of_range(e.source, n);
        if (e.target >= n) throw vertex_out_of_range(e.target, n);
        if (e.source == e.target) throw self_loop(e.source);
        if (has_edge(e.source, e.target)) throw duplicate_edge(e.source, e.target);
        const auto i = static_cast<std::uint32_t>(added_.size());
        added_.push_back(e);
        out_next_.push_back(out_head_[e.source]);
        out_head_[e.source] = i;
        in_next_.push_back(in_head_[e.target]);
        in_head_[e.target] = i;
    }

    digraph to_digraph() const {
        std::vector<edge> all(base_.edges().begin(), base_.edges().end());
        all.insert(all.end(), added_.begin(), added_.end());
        return digraph(num_vertices(), std::move(all));
    }

private:
    static constexpr std::uint32_t nil = std::numeric_limits<std::uint32_t>::max();

    digraph base_;
    std::vector<edge> added_;
    std::vector<std::uint32_t> out_head_;
    std::vector<std::uint32_t> in_head_;
    std::vector<std::uint32_t> out_next_;
    std::vector<std::uint32_t> in_next_;
};

// Members in discovery order plus an n-bit membership test.
struct vertex_set {
    std::vector<vertex_id> members;
    vertex_bitset contains;

    bool has(vertex_id v) const { return contains.test(v); }
    std::size_t size() const noexcept { return members.size(); }
};

namespace detail {

template <bool Forward, traversable_graph G>
vertex_set bfs_closure(const G &g, vertex_id start) {
    vertex_set out{{start}, vertex_bitset(g.num_vertices())};
    out.contains.set(start);
    for (std::size_t head = 0; head < out.members.size(); ++head) {
        auto visit = [&](vertex_id w) {
            if (out.contains.test(w)) return;
            out.contains.set(w);
            out.members.push_back(w);
        };
        if constexpr (Forward)
            g.for_each_out(out.members[head], visit);
        else
            g.for_each_in(out.members[head], visit);
    }
    return out;
}

} // namespace detail

// Vertices that can reach s, including s.
template <traversable_graph G>
vertex_set ancestors(const G &g, vertex_id s) {
    return detail::bfs_closure<false>(g, s);
}

// Vertices reachable from t, including t.
template <traversable_graph G>
vertex_set descendants(const G &g, vertex_id t) {
    return detail::bfs_closure<true>(g, t);
}

// Vertices of R_down with a path into R_up whose interior avoids R_down.
struct boundary_set {
    std::vector<vertex_id> members;
    std::unordered_map<vertex_id, std::size_t> index_of;

    std::size_t size() const noexcept { return members.size(); }
};

// Backward multi-source search from all of r_up. Vertices outside r_down are
// expanded; a vertex of r_down is recorded and not expanded. Throws
// boundary_overflow once more than `limit` boundaries are found.
template <traversable_graph G>
boundary_set find_boundary(const G &g, const vertex_set &r_down, const vertex_set &r_up,
                           std::size_t limit = std::numeric_limits<std::size_t>::max(), std::size_t round = 0) {
    boundary_set b;
    vertex_bitset seen = r_up.contains;
    std::vector<vertex_id> queue(r_up.members);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        g.for_each_in(queue[head], [&](vertex_id p) {
            if (seen.test(p)) return;
            seen.set(p);
            if (r_down.has(p)) {
                b.index_of.emplace(p, b.members.size());
                b.members.push_back(p);
                if (b.members.size() > limit) throw boundary_overflow(round, b.members.size(), limit);
            } else {
                queue.push_back(p);
            }
        });
    }
    return b;
}

// For every v in R_down, the subset of the boundary v can reach, as a bit mask
// over boundary positions.
class mark_table {
public:
    mark_table(const vertex_set &r_down, std::size_t boundary_count, std::size_t n)
        : words_((boundary_count + 63) / 64), vertices_(r_down.members), slot_(n, npos),
          bits_(vertices_.size() * words_, 0) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) slot_[vertices_[i]] = static_cast<std::uint32_t>(i);
    }

    std::size_t words_per_mask() const noexcept { return words_; }
    std::span<const vertex_id> vertices() const noexcept { return vertices_; }
    bool covers(vertex_id v) const noexcept { return v < slot_.size() && slot_[v] != npos; }

    std::span<const std::uint64_t> mask(vertex_id v) const noexcept {
        return {bits_.data() + std::size_t{slot_[v]} * words_, words_};
    }
    bool test(vertex_id v, std::size_t j) const noexcept {
        return (bits_[std::size_t{slot_[v]} * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(vertex_id v, std::size_t j) noexcept {
        bits_[std::size_t{slot_[v]} * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    // Boundary positions marked for v, ascending.
    std::vector<std::size_t> marked(vertex_id v) const {
        std::vector<std::size_t> js;
        auto m = mask(v);
        for (std::size_t w = 0; w < m.size(); ++w)
            for (auto word = m[w]; word != 0; word &= word - 1)
                js.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        return js;
    }

private:
    static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

    std::size_t words_;
    std::vector<vertex_id> vertices_;
    std::vector<std::uint32_t> slot_;
    std::vector<std::uint64_t> bits_;
};

struct boundary_marking {
    mark_table marks;
    // reach[j] is the reachability set of boundary j.
    std::vector<vertex_bitset> reach;
};

// For each boundary b_j: a backward search confined to R_down sets bit j on
// every vertex that reaches b_j, and a forward search records R(b_j). The
// confinement is exact because any path ending in b_j only visits vertices
// that reach s.
template <traversable_graph G>
boundary_marking mark_boundaries(const G &g, const vertex_set &r_down, const boundary_set &b) {
    const std::size_t n = g.num_vertices();
    boundary_marking out{mark_table(r_down, b.size(), n), {}};
    out.reach.reserve(b.size());
    std::vector<vertex_id> queue;
    vertex_bitset seen(n);
    for (std::size_t j = 0; j < b.size(); ++j) {
        const vertex_id bj = b.members[j];

        seen.reset();
        queue.assign(1, bj);
        seen.set(bj);
        out.marks.set(bj, j);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            g.for_each_in(queue[head], [&](vertex_id p) {
                if (seen.test(p) || !r_down.has(p)) return;
                seen.set(p);
                out.marks.set(p, j);
                queue.push_back(p);
            });
        }
#ifndef NDEBUG
        // Any path into bj from R_down stays inside R_down, so the restricted
        // search must agree with an unrestricted one.
        {
            const vertex_set above = ancestors(g, bj);
            for (vertex_id v : r_down.members) assert(out.marks.test(v, j) == above.has(v));
        }
#endif

        out.reach.push_back(descendants(g, bj).contains);
    }
    return out;
}

struct mask_hash {
    using is_transparent = void;
    std::size_t operator()(std::span<const std::uint64_t> m) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : m) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
    std::size_t operator()(const std::vector<std::uint64_t> &m) const noexcept {
        return (*this)(std::span<const std::uint64_t>(m));
    }
};

struct mask_equal {
    using is_transparent = void;
    bool operator()(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const noexcept {
        return std::ranges::equal(a, b);
    }
};

// Memo from a boundary mask M to a(R_up \ union of R(b) for b in M).
template <typename Value>
class gain_table {
public:
    using map_type = std::unordered_map<std::vector<std::uint64_t>, Value, mask_hash, mask_equal>;

    std::size_t size() const noexcept { return entries_.size(); }
    const map_type &entries() const noexcept { return entries_; }

    const Value *find(std::span<const std::uint64_t> mask) const {
        auto it = entries_.find(mask);
        return it == entries_.end() ? nullptr : &it->second;
    }
    const Value &at(std::span<const std::uint64_t> mask) const {
        auto it = entries_.find(mask);
        if (it == entries_.end()) throw invariant_violation("mask missing from gain table");
        return it->second;
    }

    void emplace(std::span<const std::uint64_t> mask, Value gain) {
        entries_.emplace(std::vector<std::uint64_t>(mask.begin(), mask.end()), gain);
    }

private:
    map_type entries_;
};

// One gain per distinct mask over R_down, each computed once by OR-ing the
// marked reach sets and sweeping R_up. Throws gain_overflow once more than
// `limit` distinct masks appear.
template <typename Value>
gain_table<Value> build_gain_table(std::span<const Value> weights, const vertex_set &r_up, const mark_table &marks,
                                   std::span<const vertex_bitset> reach,
                                   std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                   std::size_t round = 0) {
    gain_table<Value> gains;
    const std::size_t n = weights.size();
    vertex_bitset covered(n);
    for (vertex_id v : marks.vertices()) {
        auto mask = marks.mask(v);
        if (gains.find(mask)) continue;
        if (gains.size() + 1 > limit) throw gain_overflow(round, gains.size() + 1, limit);

        covered.reset();
        for (std::size_t j : marks.marked(v)) covered |= reach[j];
        Value gain{};
        for (vertex_id x : r_up.members)
            if (!covered.test(x)) gain += weights[x];
        gains.emplace(mask, gain);
    }
    return gains;
}

struct round_diagnostics {
    std::size_t round = 0;
    std::size_t r_down = 0;
    std::size_t r_up = 0;
    std::size_t boundary = 0;
    std::size_t distinct_masks = 0;
    // Feedback edge number of the graph after this round's insertion; the
    // bound both counters were checked against.
    std::size_t feedback_bound = 0;
    double elapsed_ms = 0.0;
};

// Everything a round computed, exposed before the update is applied.
template <typename Value>
struct round_view {
    std::size_t round;
    edge inserted;
    const augmented_graph &graph;
    const vertex_set &r_down;
    const vertex_set &r_up;
    const boundary_set &boundary;
    const boundary_marking &marking;
    const gain_table<Value> &gains;
    std::span<const Value> values_before;
};

template <typename Value>
using round_observer = std::function<void(const round_view<Value> &)>;

// Current graph and its weighted reachability numbers; edges are inserted
// one round at a time and the numbers are kept exact after every round.
template <typename Value>
class round_state {
public:
    // `values` must be the reachability numbers of `base` under `weights`.
    round_state(digraph base, std::vector<Value> values)
        : feedback_(reachcount::feedback_edge_number(base)), components_(base.num_vertices()), graph_(std::move(base)),
          values_(std::move(values)) {
        if (values_.size() != graph_.num_vertices()) throw index_mismatch("values do not match vertex count");
        for (const auto &e : graph_.base().edges()) components_.unite(e.source, e.target);
    }

    const augmented_graph &graph() const noexcept { return graph_; }
    std::span<const Value> values() const noexcept { return values_; }
    std::vector<Value> take_values() && { return std::move(values_); }
    std::size_t rounds_done() const noexcept { return round_; }
    std::size_t current_feedback_number() const noexcept { return feedback_; }

    // Inserts e and updates every reachability number. The current graph plus
    // e must be acyclic; cycle_introduced is thrown otherwise.
    round_diagnostics insert_edge(edge e, std::span<const Value> weights, const round_observer<Value> &observer = {}) {
        const auto started = std::chrono::steady_clock::now();
        const std::size_t n = graph_.num_vertices();
        if (weights.size() != n) throw index_mismatch("weighting does not match vertex count");
        if (e.source >= n) throw vertex_out_of_range(e.source, n);
        if (e.target >= n) throw vertex_out_of_range(e.target, n);
        if (e.source == e.target) throw self_loop(e.source);
        if (graph_.has_edge(e.source, e.target)) throw duplicate_edge(e.source, e.target);

        const std::size_t round = round_ + 1;
        const std::size_t bound = feedback_ + (components_.find(e.source) == components_.find(e.target) ? 1 : 0);

        vertex_set r_down = ancestors(graph_, e.source);
        vertex_set r_up = descendants(graph_, e.target);
        for (vertex_id x : r_up.members)
            if (r_down.has(x)) throw cycle_introduced(e.source, e.target);

        boundary_set boundary = find_boundary(graph_, r_down, r_up, bound, round);
        boundary_marking marking = mark_boundaries(graph_, r_down, boundary);
        // s itself always carries the empty mask, even when bound is 0.
        gain_table<Value> gains =
            build_gain_table<Value>(weights, r_up, marking.marks, marking.reach, std::max<std::size_t>(1, 2 * bound), round);

        if (observer) observer(round_view<Value>{round, e, graph_, r_down, r_up, boundary, marking, gains, values_});

        for (vertex_id v : r_down.members) values_[v] += gains.at(marking.marks.mask(v));
        graph_.insert(e);
        components_.unite(e.source, e.target);
        feedback_ = bound;
        round_ = round;

        return {round,
                r_down.size(),
                r_up.size(),
                boundary.size(),
                gains.size(),
                bound,
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count()};
    }

private:
    std::size_t feedback_;
    union_find components_;
    augmented_graph graph_;
    std::vector<Value> values_;
    std::size_t round_ = 0;
};

struct acyclic_options {
    // Optional permutation of the removed edges (indices into the removed list).
    std::optional<std::vector<std::size_t>> reinsertion_order;
};

template <typename Value>
struct acyclic_solution {
    std::vector<Value> values;
    std::vector<edge> removed;
    std::vector<round_diagnostics> rounds;
    double decompose_ms = 0.0;
    double forest_ms = 0.0;
    double rounds_ms = 0.0;
};

// Weighted reachability on an acyclic digraph: solve a spanning polyforest,
// then put the f left-out edges back one round at a time.
template <typename Value>
acyclic_solution<Value> solve_acyclic(const digraph &g, std::span<const Value> weights,
                                      const acyclic_options &options = {},
                                      const round_observer<Value> &observer = {}) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t) {
        return std::chrono::duration<double, std::milli>(clock::now() - t).count();
    };
    if (weights.size() != g.num_vertices()) throw index_mismatch("weighting does not match vertex count");

    acyclic_solution<Value> out;
    auto t0 = clock::now();
    // Ids already in reverse topological order (as a condensation produces)
    // need neither the acyclicity check nor a sort.
    std::vector<vertex_id> order;
    if (!std::ranges::all_of(g.edges(), [](const edge &e) { return e.source > e.target; }))
        order = topological_order(g, topo_method::kahn);
    feedback_decomposition_t decomposition = feedback_decomposition(g);
    out.decompose_ms = ms_since(t0);

    // The forest is a subgraph of g, so g's order serves it too.
    t0 = clock::now();
    std::vector<Value> initial = detail::accumulate_reachability<Value>(decomposition.forest, weights, order);
    out.forest_ms = ms_since(t0);

    out.removed = std::move(decomposition.removed);
    std::vector<edge> sequence = out.removed;
    if (options.reinsertion_order) {
        const auto &perm = *options.reinsertion_order;
        if (perm.size() != sequence.size()) throw index_mismatch("reinsertion order has wrong length");
        std::vector<bool> used(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (perm[i] >= perm.size() || used[perm[i]]) throw index_mismatch("reinsertion order is not a permutation");
            used[perm[i]] = true;
            sequence[i] = out.removed[perm[i]];
        }
    }

    t0 = clock::now();
    round_state<Value> state(std::move(decomposition.forest), std::move(initial));
    out.rounds.reserve(sequence.size());
    for (const edge &e : sequence) out.rounds.push_back(state.insert_edge(e, weights, observer));
    out.rounds_ms = ms_since(t0);
    out.values = std::move(state).take_values();
    return out;
}

} // namespace reachcount

#endif
