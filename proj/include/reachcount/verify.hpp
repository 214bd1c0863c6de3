#ifndef REACHCOUNT_VERIFY_HPP_
#define REACHCOUNT_VERIFY_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "digraph.hpp"
#include "generate.hpp"
#include "incremental.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "solver.hpp"

// Randomised equivalence harness: the fixed-parameter solver against the
// brute-force oracle, plus the per-round set identities and size bounds.
namespace reachcount {

enum class mode_mix { acyclic, general, mixed };

struct verify_config {
    std::size_t trials = 1000;
    std::size_t n_max = 60;
    std::size_t f_max = 8;
    std::uint64_t seed = 1;
    mode_mix modes = mode_mix::mixed;
    // Instances up to this size also get the per-vertex set identity check.
    std::size_t set_check_max_n = 30;
    double weight_lo = -10.0;
    double weight_hi = 10.0;
    double tolerance = 1e-9;
    unsigned threads = 1;
};

// Solver under test. Each callable receives an observer it may ignore.
struct solver_under_test {
    std::function<std::vector<std::uint64_t>(const digraph &, std::span<const std::uint64_t>,
                                             const round_observer<std::uint64_t> &)>
        counts;
    std::function<std::vector<double>(const digraph &, std::span<const double>, const round_observer<double> &)>
        weighted;

    static solver_under_test library() {
        return {[](const digraph &g, std::span<const std::uint64_t> a, const round_observer<std::uint64_t> &obs) {
                    return solve<std::uint64_t>(g, a, {}, obs).values;
                },
                [](const digraph &g, std::span<const double> a, const round_observer<double> &obs) {
                    return solve<double>(g, a, {}, obs).values;
                }};
    }
};

struct instance_spec {
    std::size_t n = 1;
    std::size_t f = 0;
    generation_mode mode = generation_mode::acyclic;
    std::uint64_t seed = 0;
};

struct trial_record {
    instance_spec spec;
    bool passed = true;
    std::string failure;
    std::size_t rounds = 0;
    std::size_t max_boundary = 0;
    std::size_t max_distinct_masks = 0;
    std::size_t bound_violations = 0;
    std::size_t set_checks = 0;
    std::size_t set_mismatches = 0;
    double max_relative_error = 0.0;
    vertex_weighting weights;
};

struct verification_report {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t rounds = 0;
    std::size_t bound_violations = 0;
    std::size_t set_checks = 0;
    std::size_t set_mismatches = 0;
    std::size_t max_boundary = 0;
    std::size_t max_distinct_masks = 0;
    double max_relative_error = 0.0;
    std::vector<trial_record> failed;

    bool ok() const noexcept { return failures == 0; }
};

// Picks trial i's instance. Independent of scheduling.
inline instance_spec sample_instance(const verify_config &cfg, std::size_t i) {
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ull + i);
    instance_spec spec;
    spec.n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(cfg.n_max, 1))(rng);
    switch (cfg.modes) {
    case mode_mix::acyclic: spec.mode = generation_mode::acyclic; break;
    case mode_mix::general: spec.mode = generation_mode::general; break;
    case mode_mix::mixed:
        spec.mode = std::bernoulli_distribution(0.5)(rng) ? generation_mode::acyclic : generation_mode::general;
        break;
    }
    spec.f = std::uniform_int_distribution<std::size_t>(0, cfg.f_max)(rng);
    spec.f = std::min<std::size_t>(spec.f, extra_edge_capacity(spec.n, spec.mode));
    spec.seed = rng();
    return spec;
}

// Compares R_{G+e}(v) \ R_G(v) with R_up \ (union of R(b) over v's marked
// boundaries), and with the empty set off R_down, for every vertex v.
template <typename Value>
std::size_t count_set_identity_mismatches(const round_view<Value> &view) {
    const digraph before = view.graph.to_digraph();
    std::vector<edge> plus(before.edges().begin(), before.edges().end());
    plus.push_back(view.inserted);
    const digraph after(before.num_vertices(), std::move(plus));

    std::size_t mismatches = 0;
    for (vertex_id v = 0; v < before.num_vertices(); ++v) {
        auto old_set = oracle::reachability_set(before, v);
        auto new_set = oracle::reachability_set(after, v);
        std::vector<vertex_id> lhs;
        std::ranges::set_difference(new_set, old_set, std::back_inserter(lhs));

        std::vector<vertex_id> rhs;
        if (view.r_down.has(v)) {
            auto marked = view.marking.marks.marked(v);
            for (vertex_id x : view.r_up.members) {
                bool covered = std::ranges::any_of(marked, [&](std::size_t j) { return view.marking.reach[j].test(x); });
                if (!covered) rhs.push_back(x);
            }
            std::ranges::sort(rhs);
        }
        if (lhs != rhs) ++mismatches;
    }
    return mismatches;
}

inline std::string describe_counterexample(const digraph &g, const trial_record &r) {
    std::ostringstream out;
    out << "# counterexample: " << r.failure << '\n';
    out << "# n=" << r.spec.n << " f=" << r.spec.f
        << " mode=" << (r.spec.mode == generation_mode::acyclic ? "acyclic" : "general") << " seed=" << r.spec.seed
        << '\n';
    if (!r.weights.empty()) {
        out << "# weights:";
        char buf[40];
        for (double w : r.weights) {
            std::snprintf(buf, sizeof buf, " %.17g", w);
            out << buf;
        }
        out << '\n';
    }
    write_edge_list(out, g);
    return out.str();
}

inline trial_record run_trial(const verify_config &cfg, std::size_t index, const solver_under_test &solver) {
    trial_record rec;
    rec.spec = sample_instance(cfg, index);
    const digraph g = generate_bounded_feedback_digraph(rec.spec.n, rec.spec.f, rec.spec.seed, rec.spec.mode);
    const std::size_t f = feedback_edge_number(g);
    const bool check_sets = g.num_vertices() <= cfg.set_check_max_n;

    auto fail = [&](std::string why) {
        if (rec.passed) rec.failure = std::move(why);
        rec.passed = false;
    };

    auto observe = [&](std::size_t boundary, std::size_t masks) {
        ++rec.rounds;
        rec.max_boundary = std::max(rec.max_boundary, boundary);
        rec.max_distinct_masks = std::max(rec.max_distinct_masks, masks);
        if (boundary > f || masks > 2 * f) {
            ++rec.bound_violations;
            fail("boundary/mask bound exceeded");
        }
    };

    try {
        std::vector<std::uint64_t> ones(g.num_vertices(), 1);
        round_observer<std::uint64_t> count_obs = [&](const round_view<std::uint64_t> &view) {
            observe(view.boundary.size(), view.gains.size());
            if (check_sets) {
                ++rec.set_checks;
                if (std::size_t bad = count_set_identity_mismatches(view)) {
                    rec.set_mismatches += bad;
                    fail("set identity violated in round " + std::to_string(view.round));
                }
            }
        };
        auto got = solver.counts(g, ones, count_obs);
        auto want = oracle::reachability<std::uint64_t>(g, ones);
        if (got != want) fail("unweighted values differ from oracle");

        std::mt19937_64 rng(rec.spec.seed ^ 0x5bd1e995u);
        std::uniform_real_distribution<double> dist(cfg.weight_lo, cfg.weight_hi);
        rec.weights.resize(g.num_vertices());
        for (double &w : rec.weights) w = dist(rng);
        round_observer<double> weight_obs = [&](const round_view<double> &view) {
            observe(view.boundary.size(), view.gains.size());
        };
        auto got_w = solver.weighted(g, rec.weights, weight_obs);
        auto want_w = oracle::reachability<double>(g, rec.weights);
        if (got_w.size() != want_w.size()) {
            fail("weighted result has wrong length");
        } else {
            for (std::size_t v = 0; v < got_w.size(); ++v) {
                double err = std::abs(got_w[v] - want_w[v]) / std::max(1.0, std::abs(want_w[v]));
                rec.max_relative_error = std::max(rec.max_relative_error, err);
                if (!(err <= cfg.tolerance)) fail("weighted value at vertex " + std::to_string(v) + " off by " +
                                                   std::to_string(err));
            }
        }
    } catch (const reachcount_error &e) {
        fail(std::string("solver raised: ") + e.what());
    }
    if (rec.passed) rec.weights.clear();
    return rec;
}

inline verification_report run_verification(const verify_config &cfg,
                                             const solver_under_test &solver = solver_under_test::library()) {
    std::vector<trial_record> records(cfg.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cfg.trials;) records[i] = run_trial(cfg, i, solver);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }

    verification_report report;
    report.trials = cfg.trials;
    for (auto &r : records) {
        report.rounds += r.rounds;
        report.bound_violations += r.bound_violations;
        report.set_checks += r.set_checks;
        report.set_mismatches += r.set_mismatches;
        report.max_boundary = std::max(report.max_boundary, r.max_boundary);
        report.max_distinct_masks = std::max(report.max_distinct_masks, r.max_distinct_masks);
        report.max_relative_error = std::max(report.max_relative_error, r.max_relative_error);
        if (!r.passed) {
            ++report.failures;
            report.failed.push_back(std::move(r));
        }
    }
    return report;
}

} // namespace reachcount

#endif
