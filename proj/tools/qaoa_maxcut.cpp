// Copyright 2026 The qaoa-spsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "qaoa_spsa/cli.hpp"

namespace {

using qaoa_spsa::cli::Mode;
using qaoa_spsa::cli::RunConfig;

void add_common(CLI::App& cmd, RunConfig& config) {
    cmd.add_option("graph", config.graph_path, "Edge-list graph file")->required();
    cmd.add_option("--p", config.p, "QAOA depth")->capture_default_str();
    cmd.add_option("--samples", config.n_samples, "Measurements per expectation estimate")->capture_default_str();
}

void add_seed(CLI::App& cmd, std::string& seed) {
    cmd.add_option("--seed", seed, "Integer seed, or 'random' for an entropy seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QAOA Max-Cut solver trained with SPSA on a state-vector simulator"};
    app.require_subcommand(1);

    RunConfig config;
    std::string seed = std::to_string(qaoa_spsa::kDefaultSeed);

    auto* solve = app.add_subcommand("solve", "Train QAOA angles with SPSA and report the best cut");
    add_common(*solve, config);
    add_seed(*solve, seed);
    solve->add_option("--iterations", config.n_iterations, "SPSA iterations")->capture_default_str();
    solve->add_option("--a-start", config.a_start, "Initial step gain a")->capture_default_str();
    solve->add_option("--c-start", config.c_start, "Initial perturbation magnitude c")->capture_default_str();
    solve->add_option("--decay", config.decay, "Decay exponent for a and c")->capture_default_str();
    solve->add_option("--c-floor", config.c_floor, "Lower bound on c")->capture_default_str();
    solve->add_option("--init-range", config.init_half_range, "Initial angles drawn from [-r, r]")
        ->capture_default_str();
    solve->add_flag("--exact", config.exact, "Use the exact expectation instead of sampling");
    solve->add_flag("--parallel", config.parallel, "Evaluate the +/- perturbations concurrently");
    solve->add_option("--out", config.output_path, "Write a JSON result document");

    auto* brute = app.add_subcommand("brute", "Exhaustive Max-Cut search (n <= 20)");
    brute->add_option("graph", config.graph_path, "Edge-list graph file")->required();

    auto* evaluate = app.add_subcommand("evaluate", "Expectation value at given angles");
    add_common(*evaluate, config);
    add_seed(*evaluate, seed);
    evaluate->add_option("--gammas", config.gammas, "Comma-separated gamma angles (radians)")->required();
    evaluate->add_option("--betas", config.betas, "Comma-separated beta angles (radians)")->required();

    CLI11_PARSE(app, argc, argv);

    if (seed == "random") {
        config.seed = std::random_device{}();
        std::cerr << "seed: " << config.seed << '\n';
    } else {
        try {
            std::size_t pos = 0;
            config.seed = std::stoull(seed, &pos);
            if (pos != seed.size()) throw std::invalid_argument(seed);
        } catch (const std::exception&) {
            std::cerr << "error: --seed must be a non-negative integer or 'random'\n";
            return 1;
        }
    }

    if (solve->parsed()) config.mode = Mode::solve;
    if (brute->parsed()) config.mode = Mode::brute;
    if (evaluate->parsed()) config.mode = Mode::evaluate;
    return qaoa_spsa::cli::run(config, std::cout, std::cerr);
}
