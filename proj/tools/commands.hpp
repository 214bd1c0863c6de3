#ifndef REACHCOUNT_TOOLS_COMMANDS_HPP_
#define REACHCOUNT_TOOLS_COMMANDS_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#ifdef __GLIBC__
#include <malloc.h>
#endif
#include <vector>

#include <reachcount/reachcount.hpp>
#include <reachcount/verify.hpp>

namespace reachcount::cli {

enum exit_code : int { ok = 0, input_error = 1, invariant_error = 2, mismatch = 3 };

struct solve_args {
    std::string graph_path;
    std::optional<std::string> weights_path;
    std::string algorithm = "fpt";
    std::optional<std::string> out_path;
    // "-" means standard error.
    std::optional<std::string> stats_path;
    bool dedupe = false;
};

struct run_report {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t f = 0;
    std::size_t f_condensed = 0;
    double parse_ms = 0, condense_ms = 0, decompose_ms = 0, forest_ms = 0, rounds_ms = 0, total_ms = 0;
    std::vector<round_diagnostics> rounds;
};

inline void write_round_csv(std::ostream &out, const std::vector<round_diagnostics> &rounds) {
    out << "round,r_down,r_up,boundary,distinct_masks\n";
    for (const auto &r : rounds)
        out << r.round << ',' << r.r_down << ',' << r.r_up << ',' << r.boundary << ',' << r.distinct_masks << '\n';
}

inline void write_report(std::ostream &out, const run_report &r) {
    out << "algorithm,n,m,f,f_condensed,parse_ms,condense_ms,decompose_ms,forest_ms,rounds_ms,total_ms\n"
        << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.f << ',' << r.f_condensed << ',' << r.parse_ms << ','
        << r.condense_ms << ',' << r.decompose_ms << ',' << r.forest_ms << ',' << r.rounds_ms << ',' << r.total_ms
        << "\n\n";
    write_round_csv(out, r.rounds);
}

inline unsigned worker_threads() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("REACHCOUNT_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) cap = std::min<unsigned>(cap, static_cast<unsigned>(v));
        } catch (const std::exception &) {
            std::cerr << "warning: ignoring malformed REACHCOUNT_THREADS\n";
        }
    }
    return cap;
}

inline int cmd_solve(const solve_args &args, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t) {
        return std::chrono::duration<double, std::milli>(clock::now() - t).count();
    };
    if (args.algorithm != "fpt" && args.algorithm != "naive") {
        err << "error: unknown algorithm '" << args.algorithm << "'\n";
        return input_error;
    }

    const auto started = clock::now();
    run_report report;
    report.algorithm = args.algorithm;
    labeled_graph input;
    vertex_weighting weights;
    try {
        std::ifstream in(args.graph_path);
        if (!in) throw reachcount_error("cannot open " + args.graph_path);
        input = parse_edge_list(in, {args.dedupe});
        for (const auto &w : input.warnings) err << "warning: " << w << '\n';
        if (args.weights_path) {
            std::ifstream win(*args.weights_path);
            if (!win) throw reachcount_error("cannot open " + *args.weights_path);
            weights = parse_weights(win, input);
        }
    } catch (const reachcount_error &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    report.parse_ms = ms_since(started);

    const digraph &g = input.graph;
    report.n = g.num_vertices();
    report.m = g.num_edges();
    report.f = feedback_edge_number(g);

    std::ostringstream body;
    try {
        if (args.algorithm == "naive") {
            const auto t0 = clock::now();
            if (args.weights_path) {
                write_values(body, input.labels, oracle::reachability<double>(g, weights));
            } else {
                write_values(body, input.labels, oracle::reachability_counts(g));
            }
            report.f_condensed = report.f;
            report.rounds_ms = ms_since(t0);
        } else {
            auto fill = [&](const auto &sol) {
                report.f_condensed = sol.feedback_condensed;
                report.condense_ms = sol.condense_ms;
                report.decompose_ms = sol.decompose_ms;
                report.forest_ms = sol.forest_ms;
                report.rounds_ms = sol.rounds_ms;
                report.rounds = sol.rounds;
                write_values(body, input.labels, sol.values);
            };
            if (args.weights_path) {
                fill(solve<double>(g, weights));
            } else {
                std::vector<std::uint64_t> ones(g.num_vertices(), 1);
                fill(solve<std::uint64_t>(g, ones));
            }
        }
    } catch (const invariant_violation &e) {
        err << "invariant violation: " << e.what() << '\n'
            << "instance: n=" << report.n << " m=" << report.m << " f=" << report.f << '\n';
        write_round_csv(err, report.rounds);
        return invariant_error;
    } catch (const reachcount_error &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    report.total_ms = ms_since(started);

    if (args.out_path) {
        std::ofstream f(*args.out_path);
        if (!f) {
            err << "error: cannot write " << *args.out_path << '\n';
            return input_error;
        }
        f << body.str();
    } else {
        out << body.str();
    }

    if (args.stats_path) {
        if (*args.stats_path == "-") {
            write_report(err, report);
        } else {
            std::ofstream s(*args.stats_path, std::ios::app);
            if (!s) {
                err << "error: cannot write " << *args.stats_path << '\n';
                return input_error;
            }
            write_report(s, report);
        }
    }
    return ok;
}

inline std::optional<generation_mode> parse_mode(const std::string &s) {
    if (s == "acyclic") return generation_mode::acyclic;
    if (s == "general") return generation_mode::general;
    return std::nullopt;
}

inline int cmd_generate(std::size_t n, std::size_t f, std::uint64_t seed, const std::string &mode,
                        const std::string &out_path, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    auto m = parse_mode(mode);
    if (!m) {
        err << "error: mode must be acyclic or general\n";
        return input_error;
    }
    try {
        digraph g = generate_bounded_feedback_digraph(n, f, seed, *m);
        std::ofstream file(out_path);
        if (!file) throw reachcount_error("cannot write " + out_path);
        write_edge_list(file, g);
        out << "n=" << g.num_vertices() << " m=" << g.num_edges() << " f=" << feedback_edge_number(g) << '\n';
    } catch (const reachcount_error &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}

struct verify_args {
    verify_config config;
    std::string counterexample_path = "reachcount-counterexample.txt";
};

inline int cmd_verify(const verify_args &args, const solver_under_test &solver = solver_under_test::library(),
                      std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    verification_report r = run_verification(args.config, solver);
    out << "trials=" << r.trials << " failures=" << r.failures << " rounds=" << r.rounds
        << " set_checks=" << r.set_checks << " set_mismatches=" << r.set_mismatches
        << " bound_violations=" << r.bound_violations << " max_boundary=" << r.max_boundary
        << " max_distinct_masks=" << r.max_distinct_masks << " max_relative_error=" << r.max_relative_error << '\n';
    if (r.ok()) {
        out << "PASS\n";
        return ok;
    }
    const trial_record &first = r.failed.front();
    err << "FAIL: " << first.failure << '\n';
    std::ofstream ce(args.counterexample_path);
    if (ce) {
        digraph g = generate_bounded_feedback_digraph(first.spec.n, first.spec.f, first.spec.seed, first.spec.mode);
        ce << describe_counterexample(g, first);
        err << "counterexample written to " << args.counterexample_path << '\n';
    } else {
        err << "error: cannot write " << args.counterexample_path << '\n';
    }
    return mismatch;
}

struct bench_args {
    std::vector<std::size_t> n_values;
    std::vector<std::size_t> f_values;
    std::uint64_t seed = 1;
    std::size_t reps = 5;
    std::string mode = "general";
    std::string out_path;
    // Cells with n above this skip the naive baseline; 0 means never skip.
    std::size_t naive_max_n = 0;
};

inline double median(std::vector<double> xs) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size() / 2;
    return xs.size() % 2 ? xs[k] : 0.5 * (xs[k - 1] + xs[k]);
}

// One row per (n, f, algorithm, repetition); median_ms repeats the cell median.
inline int cmd_bench(const bench_args &args, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    using clock = std::chrono::steady_clock;
    auto mode = parse_mode(args.mode);
    if (!mode) {
        err << "error: mode must be acyclic or general\n";
        return input_error;
    }
    std::ofstream csv(args.out_path);
    if (!csv) {
        err << "error: cannot write " << args.out_path << '\n';
        return input_error;
    }
    csv << "n,f,algorithm,rep,ms,median_ms,rounds,max_boundary,max_distinct_masks\n";

#ifdef __GLIBC__
    // glibc adapts its mmap and trim thresholds as blocks are freed, so whether
    // a run pays for fresh pages depends on what ran before it. Keep every
    // block on the heap and never trim; after the warm-up run no cell does.
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, -1);
#endif

    struct row {
        std::size_t rep;
        double ms;
        std::size_t rounds, max_b, max_masks;
    };
    struct cell {
        std::size_t n, f;
        bool run_naive;
        std::vector<row> fpt, naive;
    };
    std::vector<cell> cells;
    for (std::size_t n : args.n_values)
        for (std::size_t f : args.f_values) cells.push_back({n, f, args.naive_max_n == 0 || n <= args.naive_max_n, {}, {}});

    try {
        // Untimed warm-up of every cell, then repetitions round-robin over
        // cells so that drift in machine load spreads evenly across them.
        for (const cell &c : cells) {
            digraph g = generate_bounded_feedback_digraph(c.n, c.f, args.seed, *mode);
            std::vector<std::uint64_t> ones(c.n, 1);
            (void)solve<std::uint64_t>(g, ones);
            if (c.run_naive) (void)oracle::reachability<std::uint64_t>(g, ones);
        }
        for (std::size_t rep = 0; rep < args.reps; ++rep) {
            for (cell &c : cells) {
                digraph g = generate_bounded_feedback_digraph(c.n, c.f, args.seed + rep, *mode);
                std::vector<std::uint64_t> ones(c.n, 1);

                auto t0 = clock::now();
                auto sol = solve<std::uint64_t>(g, ones);
                double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                row r{rep, ms, sol.rounds.size(), 0, 0};
                for (const auto &d : sol.rounds) {
                    r.max_b = std::max(r.max_b, d.boundary);
                    r.max_masks = std::max(r.max_masks, d.distinct_masks);
                }
                c.fpt.push_back(r);

                if (c.run_naive) {
                    t0 = clock::now();
                    auto naive = oracle::reachability<std::uint64_t>(g, ones);
                    ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
                    if (naive != sol.values) {
                        err << "error: fpt and naive disagree at n=" << c.n << " f=" << c.f << " rep=" << rep << '\n';
                        return mismatch;
                    }
                    c.naive.push_back({rep, ms, 0, 0, 0});
                }
            }
        }
        for (const cell &c : cells) {
            auto emit = [&](const char *name, const std::vector<row> &rows) {
                std::vector<double> times;
                for (const auto &r : rows) times.push_back(r.ms);
                const double med = median(times);
                for (const auto &r : rows)
                    csv << c.n << ',' << c.f << ',' << name << ',' << r.rep << ',' << r.ms << ',' << med << ','
                        << r.rounds << ',' << r.max_b << ',' << r.max_masks << '\n';
                out << "n=" << c.n << " f=" << c.f << ' ' << name << " median_ms=" << med << '\n';
            };
            emit("fpt", c.fpt);
            if (c.run_naive) emit("naive", c.naive);
        }
    } catch (const reachcount_error &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    if (!csv) {
        err << "error: failed writing " << args.out_path << '\n';
        return input_error;
    }
    return ok;
}

} // namespace reachcount::cli

#endif
