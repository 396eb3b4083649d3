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

#include "qaoa_spsa/bitstring.hpp"
#include "qaoa_spsa/errors.hpp"
#include "qaoa_spsa/graph_io.hpp"
#include "qaoa_spsa/maxcut.hpp"
#include "qaoa_spsa/qaoa.hpp"
#include "qaoa_spsa/rng.hpp"
#include "qaoa_spsa/spsa.hpp"
#include "qaoa_spsa/statevector.hpp"
