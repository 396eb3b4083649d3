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

#include <cstdint>
#include <random>

namespace qaoa_spsa {

using Rng = std::mt19937_64;
using Seed = std::uint64_t;

/// Derives an independent generator from the next draw of `parent`.
inline Rng split_stream(Rng& parent) { return Rng{parent()}; }

}  // namespace qaoa_spsa
