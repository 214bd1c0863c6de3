#ifndef REACHCOUNT_IO_HPP_
#define REACHCOUNT_IO_HPP_

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "digraph.hpp"

// Edge-list text format:
//
//   # comment
//   p <n> <m>        optional header, before any edge
//   <u> <v>          one edge per line, nonnegative integer labels
//
// Without a header, labels are mapped to ids 0, 1, ... in order of first
// appearance. With a header, labels must lie in [0, n) and are used as ids
// directly, so vertices that appear in no edge still exist.
namespace reachcount {

struct labeled_graph {
    digraph graph;
    // labels[id] is the label that id was read from.
    std::vector<std::uint64_t> labels;
    std::unordered_map<std::uint64_t, vertex_id> id_of;
    // Lines dropped under dedupe, as human-readable messages.
    std::vector<std::string> warnings;
};

struct parse_options {
    // Drop self-loops and repeated edges instead of failing.
    bool dedupe = false;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline std::optional<std::uint64_t> to_uint(std::string_view s) {
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return x;
}

inline std::optional<double> to_double(std::string_view s) {
    double x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return x;
}

} // namespace detail

inline labeled_graph parse_edge_list(std::istream &in, const parse_options &options = {}) {
    labeled_graph out;
    std::optional<std::uint64_t> declared_n;
    std::optional<std::uint64_t> declared_m;
    std::size_t data_lines = 0;
    std::vector<edge> edges;
    std::unordered_set<std::uint64_t> seen_pairs;

    auto id_for = [&](std::uint64_t label, std::size_t line_no) -> vertex_id {
        if (declared_n) {
            if (label >= *declared_n)
                throw parse_error(line_no, "label " + std::to_string(label) + " exceeds declared vertex count " +
                                               std::to_string(*declared_n));
            return static_cast<vertex_id>(label);
        }
        auto [it, inserted] = out.id_of.try_emplace(label, static_cast<vertex_id>(out.labels.size()));
        if (inserted) out.labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = detail::split_fields(line);
        if (fields.empty() || fields[0].front() == '#') continue;

        if (fields[0] == "p") {
            if (declared_n) throw parse_error(line_no, "repeated header");
            if (data_lines > 0) throw parse_error(line_no, "header must precede edges");
            if (fields.size() != 3) throw parse_error(line_no, "header must be 'p <n> <m>'");
            declared_n = detail::to_uint(fields[1]);
            declared_m = detail::to_uint(fields[2]);
            if (!declared_n || !declared_m) throw parse_error(line_no, "malformed header counts");
            if (*declared_n > std::numeric_limits<vertex_id>::max())
                throw parse_error(line_no, "vertex count too large");
            out.labels.resize(*declared_n);
            for (std::uint64_t v = 0; v < *declared_n; ++v) {
                out.labels[v] = v;
                out.id_of.emplace(v, static_cast<vertex_id>(v));
            }
            continue;
        }

        if (fields.size() != 2) throw parse_error(line_no, "expected '<u> <v>'");
        auto u_label = detail::to_uint(fields[0]);
        auto v_label = detail::to_uint(fields[1]);
        if (!u_label || !v_label) throw parse_error(line_no, "labels must be nonnegative integers");
        ++data_lines;

        vertex_id u = id_for(*u_label, line_no);
        vertex_id v = id_for(*v_label, line_no);
        if (u == v) {
            if (!options.dedupe) throw self_loop(*u_label);
            out.warnings.push_back("line " + std::to_string(line_no) + ": dropped self-loop at " +
                                   std::to_string(*u_label));
            continue;
        }
        if (!seen_pairs.insert((std::uint64_t{u} << 32) | v).second) {
            if (!options.dedupe) throw duplicate_edge(*u_label, *v_label);
            out.warnings.push_back("line " + std::to_string(line_no) + ": dropped duplicate edge " +
                                   std::to_string(*u_label) + " " + std::to_string(*v_label));
            continue;
        }
        edges.push_back({u, v});
    }
    if (declared_m && *declared_m != data_lines)
        throw parse_error(line_no, "header declares " + std::to_string(*declared_m) + " edges, found " +
                                       std::to_string(data_lines));

    out.graph = digraph(out.labels.size(), std::move(edges));
    return out;
}

inline labeled_graph parse_edge_list(std::string_view text, const parse_options &options = {}) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in, options);
}

// Always writes a header; ids are used as labels.
inline void write_edge_list(std::ostream &out, const digraph &g) {
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto &e : g.edges()) out << e.source << ' ' << e.target << '\n';
}

inline std::string serialize(const digraph &g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

// Lines '<label> <weight>'. Unlisted vertices weigh 1.
inline vertex_weighting parse_weights(std::istream &in, const labeled_graph &g) {
    vertex_weighting a(g.graph.num_vertices(), 1.0);
    std::vector<bool> assigned(a.size(), false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = detail::split_fields(line);
        if (fields.empty() || fields[0].front() == '#') continue;
        if (fields.size() != 2) throw parse_error(line_no, "expected '<vertex> <weight>'");
        auto label = detail::to_uint(fields[0]);
        auto weight = detail::to_double(fields[1]);
        if (!label) throw parse_error(line_no, "vertex label must be a nonnegative integer");
        if (!weight) throw parse_error(line_no, "malformed weight");
        auto it = g.id_of.find(*label);
        if (it == g.id_of.end()) throw parse_error(line_no, "unknown vertex " + std::to_string(*label));
        if (assigned[it->second]) throw parse_error(line_no, "weight given twice for " + std::to_string(*label));
        assigned[it->second] = true;
        a[it->second] = *weight;
    }
    return a;
}

inline void write_values(std::ostream &out, std::span<const std::uint64_t> labels,
                         std::span<const std::uint64_t> values) {
    for (std::size_t v = 0; v < values.size(); ++v) out << labels[v] << ' ' << values[v] << '\n';
}

// Twelve significant digits.
inline void write_values(std::ostream &out, std::span<const std::uint64_t> labels, std::span<const double> values) {
    char buf[64];
    for (std::size_t v = 0; v < values.size(); ++v) {
        std::snprintf(buf, sizeof buf, "%.12g", values[v]);
        out << labels[v] << ' ' << buf << '\n';
    }
}

} // namespace reachcount

#endif
