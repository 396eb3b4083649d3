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
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qaoa_spsa/bitstring.hpp"
#include "qaoa_spsa/errors.hpp"
#include "qaoa_spsa/rng.hpp"

namespace qaoa_spsa {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 24;

/// Single-qubit gate as a row-major 2x2 matrix.
struct Gate1Q {
    std::array<Amplitude, 4> m{};

    const Amplitude& operator()(std::size_t row, std::size_t col) const { return m[2 * row + col]; }

    bool is_unitary(double tol = 1e-10) const {
        // (G^dagger G)_{rc} = sum_k conj(G_kr) G_kc
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                Amplitude s = std::conj((*this)(0, r)) * (*this)(0, c) +
                              std::conj((*this)(1, r)) * (*this)(1, c);
                if (std::abs(s - Amplitude(r == c ? 1.0 : 0.0)) > tol) return false;
            }
        }
        return true;
    }
};

namespace detail {
inline void require_finite(double angle, const char* gate) {
    if (!std::isfinite(angle)) {
        throw ArgumentError(std::string(gate) + " angle must be finite");
    }
}
}  // namespace detail

inline Gate1Q hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return Gate1Q{{Amplitude(s), Amplitude(s), Amplitude(s), Amplitude(-s)}};
}

/// exp(-i theta X / 2)
inline Gate1Q rx(double theta) {
    detail::require_finite(theta, "rx");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return Gate1Q{{Amplitude(c), Amplitude(0, -s), Amplitude(0, -s), Amplitude(c)}};
}

/// exp(-i phi Z / 2) = diag(e^{-i phi/2}, e^{i phi/2})
inline Gate1Q rz(double phi) {
    detail::require_finite(phi, "rz");
    return Gate1Q{{std::polar(1.0, -phi / 2), Amplitude(0), Amplitude(0), std::polar(1.0, phi / 2)}};
}

/// Measured bitstring -> number of times it was observed.
using SampleSet = std::map<Bitstring, std::uint64_t>;

/// Dense n-qubit register. Qubit i is bit i of the amplitude index.
class StateVector {
public:
    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(std::size_t n_qubits) : n_qubits_(checked_qubits(n_qubits)) {
        amplitudes_.assign(std::size_t{1} << n_qubits_, Amplitude(0));
        amplitudes_[0] = Amplitude(1);
    }

    /// Takes amplitudes verbatim; the caller is responsible for normalization.
    StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
        : n_qubits_(checked_qubits(n_qubits)), amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
            throw ArgumentError("expected " + std::to_string(std::size_t{1} << n_qubits_) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
        }
    }

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    const Amplitude& operator[](BasisIndex k) const { return amplitudes_[k]; }

    double norm_squared() const {
        double sum = 0.0;
        for (const auto& a : amplitudes_) sum += std::norm(a);
        return sum;
    }

    StateVector& apply_1q(const Gate1Q& gate, std::size_t target) {
        check_qubit(target, "target");
        const std::size_t stride = std::size_t{1} << target;
        const std::size_t dim = amplitudes_.size();
        // Enumerate k with bit `target` clear; partner is k | stride.
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t k = base; k < base + stride; ++k) {
                const Amplitude a0 = amplitudes_[k];
                const Amplitude a1 = amplitudes_[k | stride];
                amplitudes_[k] = gate(0, 0) * a0 + gate(0, 1) * a1;
                amplitudes_[k | stride] = gate(1, 0) * a0 + gate(1, 1) * a1;
            }
        }
        return *this;
    }

    StateVector& apply_cnot(std::size_t control, std::size_t target) {
        check_qubit(control, "control");
        check_qubit(target, "target");
        if (control == target) throw ArgumentError("CNOT control and target must differ");
        const std::size_t cmask = std::size_t{1} << control;
        const std::size_t tmask = std::size_t{1} << target;
        for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
            if ((k & cmask) != 0 && (k & tmask) == 0) std::swap(amplitudes_[k], amplitudes_[k | tmask]);
        }
        return *this;
    }

    std::vector<double> probabilities() const {
        std::vector<double> probs(amplitudes_.size());
        std::transform(amplitudes_.begin(), amplitudes_.end(), probs.begin(),
                       [](const Amplitude& a) { return std::norm(a); });
        return probs;
    }

private:
    static std::size_t checked_qubits(std::size_t n) {
        if (n < 1 || n > kMaxQubits) {
            throw ConfigError("number of qubits must be in [1, " + std::to_string(kMaxQubits) +
                              "], got " + std::to_string(n));
        }
        return n;
    }

    void check_qubit(std::size_t q, const char* role) const {
        if (q >= n_qubits_) {
            throw ArgumentError(std::string(role) + " qubit " + std::to_string(q) +
                                " out of range for " + std::to_string(n_qubits_) + " qubits");
        }
    }

    std::size_t n_qubits_;
    std::vector<Amplitude> amplitudes_;
};

inline StateVector new_zero_state(std::size_t n_qubits) { return StateVector(n_qubits); }

/// Histogram of `n_samples` measurement outcomes, indexed by basis index.
inline std::vector<std::uint64_t> sample_counts(std::span<const double> probs, std::uint64_t n_samples,
                                                Rng& rng) {
    if (n_samples == 0) throw ArgumentError("n_samples must be at least 1");
    if (probs.empty()) throw ArgumentError("empty probability vector");
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    // Rounding may leave the total slightly off 1; draw against the actual total.
    const double total = cumulative.back();
    std::size_t last_nonzero = probs.size() - 1;
    while (last_nonzero > 0 && probs[last_nonzero] <= 0.0) --last_nonzero;

    std::uniform_real_distribution<double> uniform(0.0, total);
    std::vector<std::uint64_t> counts(probs.size(), 0);
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        const double u = uniform(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t k = std::min(static_cast<std::size_t>(it - cumulative.begin()), last_nonzero);
        ++counts[k];
    }
    return counts;
}

inline SampleSet to_sample_set(std::span<const std::uint64_t> counts, std::size_t n_qubits) {
    SampleSet out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] != 0) out.emplace(Bitstring::from_index(k, n_qubits), counts[k]);
    }
    return out;
}

inline SampleSet sample(const StateVector& state, std::uint64_t n_samples, Rng& rng) {
    const auto probs = state.probabilities();
    return to_sample_set(sample_counts(probs, n_samples, rng), state.n_qubits());
}

}  // namespace qaoa_spsa
