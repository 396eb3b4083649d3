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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaoa_spsa/errors.hpp"
#include "qaoa_spsa/maxcut.hpp"
#include "qaoa_spsa/rng.hpp"
#include "qaoa_spsa/statevector.hpp"

namespace qaoa_spsa {

/// Circuit angles for p stages: gammas drive the cost layer, betas the mixer.
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    std::size_t depth() const noexcept { return gammas.size(); }

    void validate() const {
        if (gammas.empty()) throw ArgumentError("QAOA depth must be at least 1");
        if (gammas.size() != betas.size()) {
            throw ArgumentError("gamma and beta counts differ: " + std::to_string(gammas.size()) + " vs " +
                                std::to_string(betas.size()));
        }
        for (double x : gammas) {
            if (!std::isfinite(x)) throw ArgumentError("gamma must be finite");
        }
        for (double x : betas) {
            if (!std::isfinite(x)) throw ArgumentError("beta must be finite");
        }
    }

    /// Flat view [gamma_0..gamma_{p-1}, beta_0..beta_{p-1}].
    std::vector<double> flatten() const {
        std::vector<double> out(gammas);
        out.insert(out.end(), betas.begin(), betas.end());
        return out;
    }

    static QaoaParams unflatten(const std::vector<double>& flat) {
        if (flat.empty() || flat.size() % 2 != 0) {
            throw ArgumentError("flat parameter vector must have even, nonzero length");
        }
        const auto half = static_cast<std::ptrdiff_t>(flat.size() / 2);
        return QaoaParams{{flat.begin(), flat.begin() + half}, {flat.begin() + half, flat.end()}};
    }

    static QaoaParams zeros(std::size_t p) { return QaoaParams{std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)}; }

    friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

/// Applies the QAOA circuit to |0...0>:
///   H on every qubit (once), then per stage P
///   CNOT(u,v) Rz(gamma_P) on v CNOT(u,v) for each edge in stored order,
///   followed by Rx(2 beta_P) on every qubit.
inline StateVector run_circuit(const Graph& graph, const QaoaParams& params) {
    params.validate();
    const std::size_t n = graph.n_vertices();
    StateVector state(n);
    const Gate1Q h = hadamard();
    for (std::size_t q = 0; q < n; ++q) state.apply_1q(h, q);

    for (std::size_t stage = 0; stage < params.depth(); ++stage) {
        const Gate1Q phase = rz(params.gammas[stage]);
        for (const auto& e : graph.edges()) {
            state.apply_cnot(e.u, e.v);
            state.apply_1q(phase, e.v);
            state.apply_cnot(e.u, e.v);
        }
        const Gate1Q mixer = rx(2.0 * params.betas[stage]);
        for (std::size_t q = 0; q < n; ++q) state.apply_1q(mixer, q);
    }
    return state;
}

inline double exact_expectation_value(const Graph& graph, const QaoaParams& params) {
    return exact_expectation(run_circuit(graph, params).probabilities(), graph);
}

inline double estimate_expectation(const Graph& graph, const QaoaParams& params, std::uint64_t n_samples,
                                   Rng& rng) {
    return sample_expectation(sample(run_circuit(graph, params), n_samples, rng), graph);
}

struct ScoredBitstring {
    Bitstring bits;
    std::size_t score = 0;

    friend bool operator==(const ScoredBitstring&, const ScoredBitstring&) = default;
};

/// Objective value plus the best bitstring the evaluation saw, if any.
struct Evaluation {
    double expectation = 0.0;
    std::optional<ScoredBitstring> best;
};

/// Sampled objective. Consumes `rng` exactly as estimate_expectation does and
/// returns the same value; additionally reports the highest-scoring outcome
/// (lowest basis index among ties).
struct SampledEvaluator {
    std::uint64_t n_samples = 10000;

    Evaluation operator()(const Graph& graph, const QaoaParams& params, Rng& rng) const {
        const auto probs = run_circuit(graph, params).probabilities();
        const auto counts = sample_counts(probs, n_samples, rng);
        std::uint64_t total_score = 0;
        std::optional<BasisIndex> best;
        std::size_t best_score = 0;
        for (BasisIndex k = 0; k < counts.size(); ++k) {
            if (counts[k] == 0) continue;
            const std::size_t s = cut_score(k, graph);
            total_score += counts[k] * s;
            if (!best || s > best_score) {
                best = k;
                best_score = s;
            }
        }
        return Evaluation{static_cast<double>(total_score) / static_cast<double>(n_samples),
                          ScoredBitstring{Bitstring::from_index(*best, graph.n_vertices()), best_score}};
    }
};

/// Noise-free objective read off the probability vector. The reported
/// bitstring is the most probable outcome (lowest index among ties).
struct ExactEvaluator {
    Evaluation operator()(const Graph& graph, const QaoaParams& params) const {
        const auto probs = run_circuit(graph, params).probabilities();
        BasisIndex mode = 0;
        for (BasisIndex k = 1; k < probs.size(); ++k) {
            if (probs[k] > probs[mode]) mode = k;
        }
        return Evaluation{exact_expectation(probs, graph),
                          ScoredBitstring{Bitstring::from_index(mode, graph.n_vertices()), cut_score(mode, graph)}};
    }
};

}  // namespace qaoa_spsa
