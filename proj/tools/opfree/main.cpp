#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "app.hpp"

int main(int argc, char** argv) {
    CLI::App cli{"Operator-valued free probability verification toolkit"};
    cli.require_subcommand(1);

    auto* run = cli.add_subcommand("run", "Run a scenario file and report every check");
    std::string scenario_path;
    std::string out_path;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    int depth = 0;
    std::size_t trials = 50;
    run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    auto* seed_opt = run->add_option("--seed", seed, "Base seed for randomized trials (default 0)");
    auto* tol_opt = run->add_option("--tol", tol, "Tolerance on max-entry defects (default 1e-10)")
                        ->check(CLI::NonNegativeNumber);
    auto* depth_opt = run->add_option("--depth", depth, "Fock truncation depth (default longest word + 1)")
                          ->check(CLI::Range(0, 16));
    auto* trials_opt = run->add_option("--trials", trials, "Randomized trials per check (default 50)");
    run->add_option("--out", out_path, "Write the JSON report here");

    auto* suites = cli.add_subcommand("suites", "List the verify suite ids");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (suites->parsed()) {
        for (const auto& id : opfree::app::suite_ids()) std::cout << id << "\n";
        return 0;
    }

    opfree::app::RunOptions options;
    if (seed_opt->count()) options.seed = seed;
    if (tol_opt->count()) options.tolerance = tol;
    if (depth_opt->count()) options.depth = depth;
    if (trials_opt->count()) options.trials = trials;

    opfree::app::RunResult result;
    try {
        result = opfree::app::run_scenario(opfree::app::load_scenario(scenario_path), options);
    } catch (const opfree::app::SchemaError& e) {
        std::cerr << "opfree: invalid scenario: " << e.what() << "\n";
        return 2;
    }

    opfree::app::print_table(result, std::cout);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "opfree: cannot write " << out_path << "\n";
            return 2;
        }
        out << opfree::app::report_json(result).dump(2) << "\n";
    }
    return opfree::app::exit_code(result.report);
}
