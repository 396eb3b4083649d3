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

#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qaoa_spsa/errors.hpp"
#include "qaoa_spsa/graph_io.hpp"
#include "qaoa_spsa/maxcut.hpp"
#include "qaoa_spsa/qaoa.hpp"
#include "qaoa_spsa/spsa.hpp"

namespace qaoa_spsa::cli {

enum class Mode { solve, brute, evaluate };

struct RunConfig {
    std::string graph_path;
    Mode mode = Mode::solve;
    std::size_t p = 2;
    std::size_t n_iterations = 100;
    std::uint64_t n_samples = 10000;
    double a_start = 0.25;
    double c_start = 0.25;
    double decay = 0.5;
    double c_floor = 0.01;
    double init_half_range = 0.1;
    Seed seed = kDefaultSeed;
    bool exact = false;
    bool parallel = false;
    std::optional<std::string> output_path;
    // evaluate mode
    std::string gammas;
    std::string betas;

    SpsaConfig spsa() const {
        SpsaConfig c;
        c.n_iterations = n_iterations;
        c.a_start = a_start;
        c.c_start = c_start;
        c.decay = decay;
        c.c_floor = c_floor;
        c.init_half_range = init_half_range;
        c.seed = seed;
        c.parallel_evaluations = parallel;
        return c;
    }

    void validate() const {
        spsa().validate();
        if (p < 1) throw ConfigError("p must be at least 1");
        if (n_samples < 1) throw ConfigError("samples must be at least 1");
    }
};

/// Shortest round-trip decimal, or `digits` significant digits when given;
/// integral values keep a trailing ".0".
inline std::string format_real(double x, std::optional<int> digits = std::nullopt) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = digits ? std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, *digits)
                                  : std::to_chars(buf, buf + sizeof(buf), x);
    std::string s(buf, ptr);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

inline std::string join_reals(const std::vector<double>& xs, std::string_view sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) out += sep;
        out += format_real(xs[i]);
    }
    return out;
}

/// Comma-separated radians, e.g. "0.1,-0.2".
inline std::vector<double> parse_angle_list(std::string_view text, std::string_view name) {
    std::vector<double> out;
    if (text.empty()) throw ArgumentError(std::string(name) + " list is empty");
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
            throw ArgumentError("malformed " + std::string(name) + " value \"" + std::string(token) + "\"");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string log_line(const IterationRecord& r) {
    return "Iteration: " + std::to_string(r.index) + " Exp(+): " + format_real(r.f_plus) +
           " Exp(-): " + format_real(r.f_minus);
}

inline std::string format_brute(const BruteForceResult& result) {
    std::string out = "max " + std::to_string(result.max_score) + ":";
    for (const auto& b : result.argmax) out += " " + b.str();
    return out;
}

inline nlohmann::json params_json(const QaoaParams& params) {
    return {{"gammas", params.gammas}, {"betas", params.betas}};
}

/// Structured result document written by `solve --out`.
inline nlohmann::json result_json(const RunConfig& config, const Graph& graph, const SpsaTrace& trace,
                                  const std::optional<BruteForceResult>& brute, double wall_time_seconds) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : graph.edges()) edges.push_back({e.u, e.v});

    nlohmann::json doc;
    doc["config"] = {
        {"graph_path", config.graph_path},
        {"n_vertices", graph.n_vertices()},
        {"edges", edges},
        {"p", config.p},
        {"iterations", config.n_iterations},
        {"samples", config.n_samples},
        {"a_start", config.a_start},
        {"c_start", config.c_start},
        {"decay", config.decay},
        {"c_floor", config.c_floor},
        {"init_half_range", config.init_half_range},
        {"seed", config.seed},
        {"exact", config.exact},
    };
    doc["initial_params"] = params_json(trace.initial_params);
    nlohmann::json iterations = nlohmann::json::array();
    for (const auto& r : trace.iterations) {
        iterations.push_back({
            {"iteration", r.index},
            {"a", r.a},
            {"c", r.c},
            {"f_plus", r.f_plus},
            {"f_minus", r.f_minus},
            {"gradient", r.gradient},
            {"gammas", r.params.gammas},
            {"betas", r.params.betas},
        });
    }
    doc["trace"] = std::move(iterations);
    doc["final"] = params_json(trace.final_params);
    doc["final"]["expectation"] = trace.final_expectation;
    if (trace.best) {
        doc["best"] = {{"bitstring", trace.best->bits.str()}, {"score", trace.best->score}};
    } else {
        doc["best"] = nullptr;
    }
    if (brute) {
        nlohmann::json argmax = nlohmann::json::array();
        for (const auto& b : brute->argmax) argmax.push_back(b.str());
        doc["brute_force"] = {{"max_score", brute->max_score}, {"argmax", argmax}};
    }
    doc["wall_time_seconds"] = wall_time_seconds;
    return doc;
}

inline int run_solve(const RunConfig& config, std::ostream& out) {
    config.validate();
    const Graph graph = parse_graph_file(config.graph_path);
    if (graph.n_vertices() > kMaxQubits) {
        throw ConfigError("graph has " + std::to_string(graph.n_vertices()) + " vertices; the simulator supports at most " +
                          std::to_string(kMaxQubits));
    }
    const auto started = std::chrono::steady_clock::now();
    auto observer = [&out](const IterationRecord& r) { out << log_line(r) << '\n'; };
    const SpsaTrace trace = config.exact
                                ? optimize(graph, config.p, config.spsa(), ExactEvaluator{}, observer)
                                : optimize(graph, config.p, config.spsa(), SampledEvaluator{config.n_samples}, observer);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    out << "Final gammas: " << join_reals(trace.final_params.gammas) << '\n';
    out << "Final betas: " << join_reals(trace.final_params.betas) << '\n';
    out << "Final expectation: " << format_real(trace.final_expectation) << '\n';
    if (trace.best) {
        out << "Best bitstring: " << trace.best->bits.str() << " score " << trace.best->score << '\n';
    }
    std::optional<BruteForceResult> brute;
    if (graph.n_vertices() <= kMaxBruteForceVertices) {
        brute = brute_force_max(graph);
        out << "Brute force: " << format_brute(*brute) << '\n';
    }
    if (config.output_path) {
        std::ofstream file(*config.output_path);
        if (!file) throw ConfigError("cannot write " + *config.output_path);
        file << result_json(config, graph, trace, brute, wall).dump(2) << '\n';
    }
    return 0;
}

inline int run_brute(const RunConfig& config, std::ostream& out) {
    const Graph graph = parse_graph_file(config.graph_path);
    out << format_brute(brute_force_max(graph)) << '\n';
    return 0;
}

inline int run_evaluate(const RunConfig& config, std::ostream& out) {
    config.validate();
    const Graph graph = parse_graph_file(config.graph_path);
    QaoaParams params{parse_angle_list(config.gammas, "gamma"), parse_angle_list(config.betas, "beta")};
    params.validate();
    if (graph.n_vertices() > kMaxQubits) {
        throw ConfigError("graph has " + std::to_string(graph.n_vertices()) + " vertices; the simulator supports at most " +
                          std::to_string(kMaxQubits));
    }
    Rng rng(config.seed);
    out << "Sampled expectation: " << format_real(estimate_expectation(graph, params, config.n_samples, rng)) << '\n';
    out << "Exact expectation: " << format_real(exact_expectation_value(graph, params), 12) << '\n';
    return 0;
}

/// Dispatches on `config.mode`. Errors are reported on `err` as a single
/// "error: ..." line and yield exit status 1.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.mode) {
            case Mode::solve: return run_solve(config, out);
            case Mode::brute: return run_brute(config, out);
            case Mode::evaluate: return run_evaluate(config, out);
        }
    } catch (const std::exception& e) {
        out.flush();
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace qaoa_spsa::cli
