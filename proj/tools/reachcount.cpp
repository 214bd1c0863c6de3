#include <CLI11.hpp>

#include "commands.hpp"

using namespace reachcount;

int main(int argc, char **argv) {
    CLI::App app{"reachcount: exact reachability counts for digraphs with small feedback edge number"};
    app.require_subcommand(1);

    cli::solve_args solve;
    auto *solve_cmd = app.add_subcommand("solve", "Count (weighted) reachable vertices for every vertex");
    solve_cmd->add_option("graph", solve.graph_path, "Edge-list file")->required();
    solve_cmd->add_option("--weights", solve.weights_path, "Vertex weight file");
    solve_cmd->add_option("--algorithm", solve.algorithm, "fpt or naive")
        ->check(CLI::IsMember({"fpt", "naive"}));
    solve_cmd->add_option("--out", solve.out_path, "Result file (default: stdout)");
    solve_cmd->add_option("--stats", solve.stats_path, "Append run statistics as CSV ('-' for stderr)");
    solve_cmd->add_flag("--dedupe", solve.dedupe, "Drop self-loops and repeated edges with a warning");

    std::size_t gen_n = 0, gen_f = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_mode = "general", gen_out;
    auto *gen_cmd = app.add_subcommand("generate", "Write a random digraph with a given feedback edge number");
    gen_cmd->add_option("--n", gen_n, "Vertex count")->required();
    gen_cmd->add_option("--f", gen_f, "Feedback edge number")->required();
    gen_cmd->add_option("--seed", gen_seed, "Random seed")->required();
    gen_cmd->add_option("--mode", gen_mode, "acyclic or general")->check(CLI::IsMember({"acyclic", "general"}));
    gen_cmd->add_option("--out", gen_out, "Output edge-list file")->required();

    cli::verify_args verify;
    std::string verify_modes = "mixed";
    auto *verify_cmd = app.add_subcommand("verify", "Check the solver against the brute-force oracle");
    verify_cmd->add_option("--trials", verify.config.trials, "Random instances")->capture_default_str();
    verify_cmd->add_option("--n-max", verify.config.n_max, "Largest vertex count")->capture_default_str();
    verify_cmd->add_option("--f-max", verify.config.f_max, "Largest feedback edge number")->capture_default_str();
    verify_cmd->add_option("--seed", verify.config.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--mode", verify_modes, "acyclic, general or mixed")
        ->check(CLI::IsMember({"acyclic", "general", "mixed"}));
    verify_cmd->add_option("--counterexample", verify.counterexample_path, "Where to write a failing instance")
        ->capture_default_str();

    cli::bench_args bench;
    auto *bench_cmd = app.add_subcommand("bench", "Time fpt against the naive baseline");
    bench_cmd->add_option("--n", bench.n_values, "Vertex counts, comma separated")->delimiter(',')->required();
    bench_cmd->add_option("--f", bench.f_values, "Feedback edge numbers, comma separated")->delimiter(',')->required();
    bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
    bench_cmd->add_option("--reps", bench.reps, "Repetitions per cell")->capture_default_str();
    bench_cmd->add_option("--mode", bench.mode, "acyclic or general")->check(CLI::IsMember({"acyclic", "general"}));
    bench_cmd->add_option("--naive-max-n", bench.naive_max_n, "Skip the naive baseline above this n (0: never)");
    bench_cmd->add_option("--out", bench.out_path, "CSV output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : cli::input_error;
    }

    if (*solve_cmd) return cli::cmd_solve(solve);
    if (*gen_cmd) return cli::cmd_generate(gen_n, gen_f, gen_seed, gen_mode, gen_out);
    if (*verify_cmd) {
        verify.config.modes = verify_modes == "acyclic"   ? mode_mix::acyclic
                              : verify_modes == "general" ? mode_mix::general
                                                          : mode_mix::mixed;
        verify.config.threads = cli::worker_threads();
        return cli::cmd_verify(verify);
    }
    if (*bench_cmd) return cli::cmd_bench(bench);
    return cli::input_error;
}
