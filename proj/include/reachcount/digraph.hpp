#ifndef REACHCOUNT_DIGRAPH_HPP_
#define REACHCOUNT_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "errors.hpp"

namespace reachcount {

using vertex_id = std::uint32_t;

struct edge {
    vertex_id source;
    vertex_id target;

    friend constexpr bool operator==(const edge &, const edge &) = default;
    friend constexpr auto operator<=>(const edge &, const edge &) = default;
};

// Per-vertex real weights. Unit weights are the unweighted problem.
using vertex_weighting = std::vector<double>;

// Immutable simple digraph on vertices 0..n-1.
//
// Both adjacency directions are stored in CSR form. Neighbor lists keep the
// order in which edges were supplied, so traversals are reproducible.
class digraph {
public:
    digraph() = default;

    // Validates and builds. Throws self_loop, duplicate_edge or
    // vertex_out_of_range.
    digraph(std::size_t n, std::vector<edge> edges) : n_(n), edges_(std::move(edges)) {
        for (const auto &e : edges_) {
            if (e.source >= n_) throw vertex_out_of_range(e.source, n_);
            if (e.target >= n_) throw vertex_out_of_range(e.target, n_);
            if (e.source == e.target) throw self_loop(e.source);
        }
        build_csr(out_offsets_, out_targets_, false);
        build_csr(in_offsets_, in_targets_, true);

        // A repeated (u, v) shows up twice in u's out-list.
        std::vector<vertex_id> stamp(n_, 0);
        for (vertex_id u = 0; u < n_; ++u) {
            for (vertex_id v : out(u)) {
                if (stamp[v] == u + 1) throw duplicate_edge(u, v);
                stamp[v] = u + 1;
            }
        }
    }

    // For edge lists derived from an already validated graph; skips the checks.
    struct trusted_t {};
    static constexpr trusted_t trusted{};
    digraph(trusted_t, std::size_t n, std::vector<edge> edges) : n_(n), edges_(std::move(edges)) {
        build_csr(out_offsets_, out_targets_, false);
        build_csr(in_offsets_, in_targets_, true);
    }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    // Edges in construction order.
    std::span<const edge> edges() const noexcept { return edges_; }

    std::span<const vertex_id> out(vertex_id v) const noexcept {
        return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
    }
    std::span<const vertex_id> in(vertex_id v) const noexcept {
        return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
    }

    std::size_t out_degree(vertex_id v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(vertex_id v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

    template <typename Fn>
    void for_each_out(vertex_id v, Fn &&fn) const {
        for (vertex_id w : out(v)) fn(w);
    }
    template <typename Fn>
    void for_each_in(vertex_id v, Fn &&fn) const {
        for (vertex_id w : in(v)) fn(w);
    }

    bool has_edge(vertex_id u, vertex_id v) const noexcept {
        for (vertex_id w : out(u))
            if (w == v) return true;
        return false;
    }

    friend bool operator==(const digraph &a, const digraph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    // Stable counting sort keyed on source (or target, for the reverse lists).
    void build_csr(std::vector<std::size_t> &offsets, std::vector<vertex_id> &targets, bool reverse) const {
        // Counts go one slot further right so that offsets[v + 1] serves as
        // v's insertion cursor and ends up as v's end offset.
        offsets.assign(n_ + 2, 0);
        for (const auto &e : edges_) ++offsets[(reverse ? e.target : e.source) + 2];
        std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
        targets.resize(edges_.size());
        for (const auto &e : edges_) {
            vertex_id from = reverse ? e.target : e.source;
            vertex_id to = reverse ? e.source : e.target;
            targets[offsets[from + 1]++] = to;
        }
        offsets.pop_back();
    }

    std::size_t n_ = 0;
    std::vector<edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<vertex_id> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<vertex_id> in_targets_;
};

inline digraph build_digraph(std::size_t n, std::vector<edge> edges) {
    return digraph(n, std::move(edges));
}

inline digraph transpose(const digraph &g) {
    std::vector<edge> reversed;
    reversed.reserve(g.num_edges());
    for (const auto &e : g.edges()) reversed.push_back({e.target, e.source});
    return digraph(g.num_vertices(), std::move(reversed));
}

// Disjoint-set forest with path halving and union by size.
class union_find {
public:
    explicit union_find(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), vertex_id{0});
    }

    vertex_id find(vertex_id v) noexcept {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // Returns false if u and v were already joined.
    bool unite(vertex_id u, vertex_id v) noexcept {
        u = find(u);
        v = find(v);
        if (u == v) return false;
        if (size_[u] < size_[v]) std::swap(u, v);
        parent_[v] = u;
        size_[u] += size_[v];
        return true;
    }

private:
    std::vector<vertex_id> parent_;
    std::vector<vertex_id> size_;
};

inline std::size_t weakly_connected_components(const digraph &g) {
    union_find uf(g.num_vertices());
    std::size_t c = g.num_vertices();
    for (const auto &e : g.edges())
        if (uf.unite(e.source, e.target)) --c;
    return c;
}

// m - n + c, where c counts weakly connected components.
inline std::size_t feedback_edge_number(const digraph &g) {
    return g.num_edges() + weakly_connected_components(g) - g.num_vertices();
}

} // namespace reachcount

#endif
