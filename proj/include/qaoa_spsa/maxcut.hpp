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
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qaoa_spsa/bitstring.hpp"
#include "qaoa_spsa/errors.hpp"
#include "qaoa_spsa/statevector.hpp"

namespace qaoa_spsa {

inline constexpr std::size_t kMaxBruteForceVertices = 20;

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unweighted Max-Cut instance. Edges keep their given orientation, which
/// the circuit uses as (control, target).
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n_vertices, std::vector<Edge> edges)
        : n_vertices_(n_vertices), edges_(std::move(edges)) {
        if (n_vertices_ == 0) throw ConfigError("graph must have at least one vertex");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& e : edges_) {
            if (e.u >= n_vertices_ || e.v >= n_vertices_) {
                throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") references a vertex outside [0, " + std::to_string(n_vertices_) + ")");
            }
            if (e.u == e.v) throw ArgumentError("self-loop on vertex " + std::to_string(e.u));
            if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
                throw ArgumentError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            }
        }
    }

    std::size_t n_vertices() const noexcept { return n_vertices_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t n_edges() const noexcept { return edges_.size(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_vertices_ = 0;
    std::vector<Edge> edges_;
};

/// The 4-cycle 0-1-2-3-0 used throughout as the reference instance.
inline Graph cycle4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

/// Number of edges whose endpoints take different values.
inline std::size_t cut_score(const Bitstring& bits, const Graph& graph) {
    if (bits.size() != graph.n_vertices()) {
        throw ArgumentError("bitstring has " + std::to_string(bits.size()) + " bits, graph has " +
                            std::to_string(graph.n_vertices()) + " vertices");
    }
    std::size_t score = 0;
    for (const auto& e : graph.edges()) {
        if (bits[e.u] != bits[e.v]) ++score;
    }
    return score;
}

inline std::size_t cut_score(BasisIndex k, const Graph& graph) {
    std::size_t score = 0;
    for (const auto& e : graph.edges()) {
        if (((k >> e.u) ^ (k >> e.v)) & 1U) ++score;
    }
    return score;
}

/// cut_score for every basis index, 2^n entries.
inline std::vector<std::size_t> score_table(const Graph& graph) {
    if (graph.n_vertices() > kMaxQubits) {
        throw SizeError("score table limited to " + std::to_string(kMaxQubits) + " vertices");
    }
    std::vector<std::size_t> table(std::size_t{1} << graph.n_vertices());
    for (std::size_t k = 0; k < table.size(); ++k) table[k] = cut_score(k, graph);
    return table;
}

struct BruteForceResult {
    std::size_t max_score = 0;
    std::vector<Bitstring> argmax;  // sorted
};

inline BruteForceResult brute_force_max(const Graph& graph) {
    const std::size_t n = graph.n_vertices();
    if (n > kMaxBruteForceVertices) {
        throw SizeError("brute force limited to " + std::to_string(kMaxBruteForceVertices) +
                        " vertices, graph has " + std::to_string(n));
    }
    BruteForceResult result;
    std::vector<BasisIndex> best;
    for (BasisIndex k = 0; k < (BasisIndex{1} << n); ++k) {
        const std::size_t s = cut_score(k, graph);
        if (s > result.max_score || best.empty()) {
            result.max_score = s;
            best.clear();
        }
        if (s == result.max_score) best.push_back(k);
    }
    for (BasisIndex k : best) result.argmax.push_back(Bitstring::from_index(k, n));
    std::sort(result.argmax.begin(), result.argmax.end());
    return result;
}

/// Average cut score under a distribution over basis indices.
inline double exact_expectation(std::span<const double> probs, const Graph& graph) {
    const std::size_t n = graph.n_vertices();
    if (n >= 64 || probs.size() != (std::size_t{1} << n)) {
        throw ArgumentError("probability vector of length " + std::to_string(probs.size()) +
                            " does not match 2^" + std::to_string(n));
    }
    double total = 0.0;
    double expectation = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        total += probs[k];
        expectation += probs[k] * static_cast<double>(cut_score(k, graph));
    }
    if (std::abs(total - 1.0) > 1e-8) {
        throw ArgumentError("probabilities sum to " + std::to_string(total) + ", expected 1");
    }
    return expectation;
}

inline double sample_expectation(const SampleSet& samples, const Graph& graph) {
    std::uint64_t total_count = 0;
    std::uint64_t total_score = 0;
    for (const auto& [bits, count] : samples) {
        total_score += count * cut_score(bits, graph);
        total_count += count;
    }
    if (total_count == 0) throw ArgumentError("sample set is empty");
    return static_cast<double>(total_score) / static_cast<double>(total_count);
}

}  // namespace qaoa_spsa
