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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "qaoa_spsa/errors.hpp"

namespace qaoa_spsa {

using BasisIndex = std::uint64_t;

/// Classical assignment z_0 z_1 ... z_{n-1}, rendered left to right.
///
/// Bit i of a basis index (least-significant bit = qubit 0) is character i
/// of the string, so index 1 on four qubits renders as "1000".
class Bitstring {
public:
    Bitstring() = default;

    static Bitstring parse(std::string_view text) {
        for (char ch : text) {
            if (ch != '0' && ch != '1') {
                throw ArgumentError("bitstring may only contain '0' and '1': \"" +
                                    std::string(text) + "\"");
            }
        }
        Bitstring out;
        out.bits_ = std::string(text);
        return out;
    }

    static Bitstring from_index(BasisIndex index, std::size_t n_bits) {
        if (n_bits < 64 && (index >> n_bits) != 0) {
            throw ArgumentError("basis index " + std::to_string(index) + " does not fit in " +
                                std::to_string(n_bits) + " bits");
        }
        Bitstring out;
        out.bits_.resize(n_bits);
        for (std::size_t i = 0; i < n_bits; ++i) {
            out.bits_[i] = ((index >> i) & 1U) != 0 ? '1' : '0';
        }
        return out;
    }

    BasisIndex index() const {
        if (bits_.size() > 64) throw ArgumentError("bitstring longer than 64 bits has no index");
        BasisIndex k = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] == '1') k |= BasisIndex{1} << i;
        }
        return k;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] == '1'; }
    const std::string& str() const noexcept { return bits_; }

    Bitstring complement() const {
        Bitstring out = *this;
        for (char& ch : out.bits_) ch = ch == '0' ? '1' : '0';
        return out;
    }

    friend auto operator<=>(const Bitstring&, const Bitstring&) = default;
    friend bool operator==(const Bitstring&, const Bitstring&) = default;

private:
    std::string bits_;
};

}  // namespace qaoa_spsa
