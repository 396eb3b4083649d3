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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qaoa_spsa {

/// Invalid run or simulator configuration (sizes, hyperparameters).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid argument to an individual operation (qubit index, angle, length).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Problem too large for exhaustive enumeration.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

enum class ParseErrorKind {
    missing_file,
    missing_header,
    malformed_line,
    vertex_out_of_range,
    self_loop,
    duplicate_edge,
};

inline const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::missing_file: return "missing file";
        case ParseErrorKind::missing_header: return "missing header";
        case ParseErrorKind::malformed_line: return "malformed line";
        case ParseErrorKind::vertex_out_of_range: return "vertex out of range";
        case ParseErrorKind::self_loop: return "self-loop";
        case ParseErrorKind::duplicate_edge: return "duplicate edge";
    }
    return "parse error";
}

/// Graph-file error. `line()` is 1-based; 0 when no line applies (missing file).
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
        : std::runtime_error(format(kind, line, detail)), kind_(kind), line_(line) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(ParseErrorKind kind, std::size_t line, const std::string& detail) {
        std::string msg = to_string(kind);
        if (line != 0) msg += " at line " + std::to_string(line);
        if (!detail.empty()) msg += ": " + detail;
        return msg;
    }

    ParseErrorKind kind_;
    std::size_t line_;
};

}  // namespace qaoa_spsa
