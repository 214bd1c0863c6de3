#ifndef REACHCOUNT_ERRORS_HPP_
#define REACHCOUNT_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace reachcount {

// Base for every error raised by the library.
class reachcount_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input does not describe a simple digraph (self-loop, duplicate edge, bad id).
class invalid_graph : public reachcount_error {
public:
    using reachcount_error::reachcount_error;
};

class self_loop : public invalid_graph {
public:
    explicit self_loop(std::uint64_t v)
        : invalid_graph("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    std::uint64_t vertex;
};

class duplicate_edge : public invalid_graph {
public:
    duplicate_edge(std::uint64_t u, std::uint64_t v)
        : invalid_graph("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
          source(u), target(v) {}
    std::uint64_t source;
    std::uint64_t target;
};

class vertex_out_of_range : public invalid_graph {
public:
    vertex_out_of_range(std::uint64_t v, std::uint64_t n)
        : invalid_graph("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n)) {}
};

class parse_error : public reachcount_error {
public:
    parse_error(std::size_t line_number, const std::string &what)
        : reachcount_error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
    std::size_t line;
};

class cyclic_graph : public reachcount_error {
public:
    cyclic_graph() : reachcount_error("graph contains a directed cycle") {}
};

class not_a_forest : public reachcount_error {
public:
    explicit not_a_forest(std::size_t f)
        : reachcount_error("graph is not a polyforest (feedback edge number " + std::to_string(f) + ")") {}
};

class infeasible_parameters : public reachcount_error {
public:
    using reachcount_error::reachcount_error;
};

class index_mismatch : public reachcount_error {
public:
    using reachcount_error::reachcount_error;
};

// Raised when a round-level bound is exceeded. Either the declared parameter
// is wrong or the solver has a logic error; both are reported, not asserted.
class invariant_violation : public reachcount_error {
public:
    using reachcount_error::reachcount_error;
};

class boundary_overflow : public invariant_violation {
public:
    boundary_overflow(std::size_t in_round, std::size_t found, std::size_t allowed)
        : invariant_violation("round " + std::to_string(in_round) + ": boundary set has " +
                              std::to_string(found) + " vertices, limit " + std::to_string(allowed)),
          round(in_round), size(found), limit(allowed) {}
    std::size_t round;
    std::size_t size;
    std::size_t limit;
};

class gain_overflow : public invariant_violation {
public:
    gain_overflow(std::size_t in_round, std::size_t found, std::size_t allowed)
        : invariant_violation("round " + std::to_string(in_round) + ": " + std::to_string(found) +
                              " distinct boundary masks, limit " + std::to_string(allowed)),
          round(in_round), size(found), limit(allowed) {}
    std::size_t round;
    std::size_t size;
    std::size_t limit;
};

class cycle_introduced : public invariant_violation {
public:
    cycle_introduced(std::uint64_t s, std::uint64_t t)
        : invariant_violation("inserting (" + std::to_string(s) + ", " + std::to_string(t) +
                              ") closes a directed cycle") {}
};

} // namespace reachcount

#endif
