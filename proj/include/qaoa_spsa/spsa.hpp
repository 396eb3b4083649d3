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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qaoa_spsa/errors.hpp"
#include "qaoa_spsa/maxcut.hpp"
#include "qaoa_spsa/qaoa.hpp"
#include "qaoa_spsa/rng.hpp"

namespace qaoa_spsa {

inline constexpr Seed kDefaultSeed = 20200117;

struct SpsaConfig {
    std::size_t n_iterations = 100;
    double a_start = 0.25;
    double c_start = 0.25;
    double decay = 0.5;
    double c_floor = 0.01;
    double init_half_range = 0.1;
    Seed seed = kDefaultSeed;
    /// Run the two evaluations of an iteration on separate threads. Results
    /// do not depend on this flag.
    bool parallel_evaluations = false;

    void validate() const {
        auto fail = [](const std::string& what) { throw ConfigError("invalid SPSA config: " + what); };
        if (n_iterations < 1) fail("n_iterations must be at least 1");
        if (!(a_start > 0) || !std::isfinite(a_start)) fail("a_start must be positive");
        if (!(c_start > 0) || !std::isfinite(c_start)) fail("c_start must be positive");
        if (!(decay >= 0) || !std::isfinite(decay)) fail("decay must be non-negative");
        if (!(c_floor > 0) || !std::isfinite(c_floor)) fail("c_floor must be positive");
        if (!(init_half_range >= 0) || !std::isfinite(init_half_range)) fail("init_half_range must be non-negative");
    }
};

struct GainSchedule {
    std::vector<double> a;
    std::vector<double> c;
};

/// a_i = a_start / (i+1)^decay, c_i = max(c_start / (i+1)^decay, c_floor), i zero-based.
inline GainSchedule gain_schedule(const SpsaConfig& config) {
    config.validate();
    GainSchedule g;
    g.a.reserve(config.n_iterations);
    g.c.reserve(config.n_iterations);
    for (std::size_t i = 0; i < config.n_iterations; ++i) {
        const double denom = std::pow(static_cast<double>(i + 1), config.decay);
        g.a.push_back(config.a_start / denom);
        g.c.push_back(std::max(config.c_start / denom, config.c_floor));
    }
    return g;
}

/// Uniform in [-half_range, half_range]; draws alternate gamma_P, beta_P.
inline QaoaParams init_params(std::size_t p, double half_range, Rng& rng) {
    if (p < 1) throw ArgumentError("QAOA depth must be at least 1");
    if (!(half_range >= 0) || !std::isfinite(half_range)) throw ArgumentError("half_range must be non-negative");
    QaoaParams params = QaoaParams::zeros(p);
    if (half_range == 0.0) return params;
    std::uniform_real_distribution<double> uniform(-half_range, half_range);
    for (std::size_t stage = 0; stage < p; ++stage) {
        params.gammas[stage] = uniform(rng);
        params.betas[stage] = uniform(rng);
    }
    return params;
}

/// Signed perturbation, every entry exactly +c or -c.
struct Perturbation {
    std::vector<double> delta_gammas;
    std::vector<double> delta_betas;

    std::vector<double> flatten() const {
        std::vector<double> out(delta_gammas);
        out.insert(out.end(), delta_betas.begin(), delta_betas.end());
        return out;
    }
};

struct PerturbedPair {
    QaoaParams plus;
    QaoaParams minus;
    Perturbation delta;
};

inline PerturbedPair perturb(const QaoaParams& params, double c, Rng& rng) {
    if (!(c > 0) || !std::isfinite(c)) throw ArgumentError("perturbation magnitude must be positive");
    params.validate();
    const std::size_t p = params.depth();
    std::bernoulli_distribution coin(0.5);
    PerturbedPair out{params, params, Perturbation{std::vector<double>(p), std::vector<double>(p)}};
    for (std::size_t stage = 0; stage < p; ++stage) {
        const double dg = coin(rng) ? c : -c;
        const double db = coin(rng) ? c : -c;
        out.delta.delta_gammas[stage] = dg;
        out.delta.delta_betas[stage] = db;
        out.plus.gammas[stage] += dg;
        out.plus.betas[stage] += db;
        out.minus.gammas[stage] -= dg;
        out.minus.betas[stage] -= db;
    }
    return out;
}

/// g_j = (f_plus - f_minus) / (2 delta_j), in flattened [gammas, betas] order.
inline std::vector<double> gradient_estimate(double f_plus, double f_minus, const Perturbation& delta) {
    const auto flat = delta.flatten();
    std::vector<double> g(flat.size());
    for (std::size_t j = 0; j < flat.size(); ++j) {
        if (flat[j] == 0.0) throw ArgumentError("perturbation component " + std::to_string(j) + " is zero");
        g[j] = (f_plus - f_minus) / (2.0 * flat[j]);
    }
    return g;
}

/// Gradient ascent step: params + a * g.
inline QaoaParams update_params(const QaoaParams& params, double a, const std::vector<double>& gradient) {
    auto flat = params.flatten();
    if (flat.size() != gradient.size()) {
        throw ArgumentError("gradient has " + std::to_string(gradient.size()) + " entries, expected " +
                            std::to_string(flat.size()));
    }
    for (std::size_t j = 0; j < flat.size(); ++j) flat[j] += a * gradient[j];
    return QaoaParams::unflatten(flat);
}

struct IterationRecord {
    std::size_t index = 0;
    double a = 0.0;
    double c = 0.0;
    double f_plus = 0.0;
    double f_minus = 0.0;
    std::vector<double> gradient;
    QaoaParams params;  // after the update
};

struct SpsaTrace {
    QaoaParams initial_params;
    std::vector<IterationRecord> iterations;
    QaoaParams final_params;
    double final_expectation = 0.0;
    std::optional<ScoredBitstring> best;
};

namespace detail {

template <typename Evaluator>
Evaluation evaluate(const Evaluator& evaluator, const Graph& graph, const QaoaParams& params, Rng& rng) {
    using Result = std::conditional_t<std::is_invocable_v<const Evaluator&, const Graph&, const QaoaParams&, Rng&>,
                                      std::invoke_result<const Evaluator&, const Graph&, const QaoaParams&, Rng&>,
                                      std::invoke_result<const Evaluator&, const Graph&, const QaoaParams&>>;
    using R = typename Result::type;
    auto call = [&]() -> R {
        if constexpr (std::is_invocable_v<const Evaluator&, const Graph&, const QaoaParams&, Rng&>) {
            return std::invoke(evaluator, graph, params, rng);
        } else {
            return std::invoke(evaluator, graph, params);
        }
    };
    if constexpr (std::is_same_v<std::decay_t<R>, Evaluation>) {
        return call();
    } else {
        static_assert(std::is_convertible_v<R, double>, "evaluator must return double or Evaluation");
        return Evaluation{static_cast<double>(call()), std::nullopt};
    }
}

inline void keep_best(std::optional<ScoredBitstring>& best, const std::optional<ScoredBitstring>& candidate) {
    if (candidate && (!best || candidate->score > best->score)) best = candidate;
}

struct NoObserver {
    void operator()(const IterationRecord&) const {}
};

}  // namespace detail

/// Maximizes `evaluator` over the 2p QAOA angles.
///
/// The evaluator is called as `evaluator(graph, params, rng)` or
/// `evaluator(graph, params)` and returns a double or an Evaluation. Every
/// evaluation gets its own generator split from the master stream, so the
/// trace is a function of the seed alone. `observer` sees each iteration
/// record as soon as it is complete.
template <typename Evaluator, typename Observer = detail::NoObserver>
SpsaTrace optimize(const Graph& graph, std::size_t p, const SpsaConfig& config, const Evaluator& evaluator,
                   Observer&& observer = {}) {
    const GainSchedule gains = gain_schedule(config);
    Rng master(config.seed);

    SpsaTrace trace;
    trace.initial_params = init_params(p, config.init_half_range, master);
    trace.iterations.reserve(config.n_iterations);
    QaoaParams params = trace.initial_params;

    for (std::size_t i = 0; i < config.n_iterations; ++i) {
        const PerturbedPair pair = perturb(params, gains.c[i], master);
        Rng rng_plus = split_stream(master);
        Rng rng_minus = split_stream(master);

        Evaluation plus;
        Evaluation minus;
        if (config.parallel_evaluations) {
            auto pending = std::async(std::launch::async, [&] {
                return detail::evaluate(evaluator, graph, pair.plus, rng_plus);
            });
            minus = detail::evaluate(evaluator, graph, pair.minus, rng_minus);
            plus = pending.get();
        } else {
            plus = detail::evaluate(evaluator, graph, pair.plus, rng_plus);
            minus = detail::evaluate(evaluator, graph, pair.minus, rng_minus);
        }
        detail::keep_best(trace.best, plus.best);
        detail::keep_best(trace.best, minus.best);

        IterationRecord record;
        record.index = i;
        record.a = gains.a[i];
        record.c = gains.c[i];
        record.f_plus = plus.expectation;
        record.f_minus = minus.expectation;
        record.gradient = gradient_estimate(plus.expectation, minus.expectation, pair.delta);
        params = update_params(params, gains.a[i], record.gradient);
        record.params = params;
        observer(record);
        trace.iterations.push_back(std::move(record));
    }

    trace.final_params = params;
    Rng rng_final = split_stream(master);
    const Evaluation final_eval = detail::evaluate(evaluator, graph, params, rng_final);
    trace.final_expectation = final_eval.expectation;
    detail::keep_best(trace.best, final_eval.best);
    return trace;
}

}  // namespace qaoa_spsa
