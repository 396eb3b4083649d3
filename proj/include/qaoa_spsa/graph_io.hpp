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

// Edge-list text format:
//
//   # comment lines start with '#'
//   n 4
//   0 1
//   1 2
//
// The first non-comment, non-blank line declares the vertex count; each
// following non-blank line is one edge "u v".

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qaoa_spsa/errors.hpp"
#include "qaoa_spsa/maxcut.hpp"

namespace qaoa_spsa {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

inline bool parse_count(std::string_view token, std::size_t& value) {
    if (token.empty() || token.front() == '+' || token.front() == '-') return false;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n_vertices = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = detail::split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;

        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError(ParseErrorKind::missing_header, line_no, "expected \"n <vertex count>\"");
            }
            if (!detail::parse_count(tokens[1], n_vertices) || n_vertices == 0) {
                throw ParseError(ParseErrorKind::malformed_line, line_no, "vertex count must be a positive integer");
            }
            have_header = true;
            continue;
        }

        Edge e;
        if (tokens.size() != 2 || !detail::parse_count(tokens[0], e.u) || !detail::parse_count(tokens[1], e.v)) {
            throw ParseError(ParseErrorKind::malformed_line, line_no, "expected \"<u> <v>\", got \"" + line + "\"");
        }
        if (e.u >= n_vertices || e.v >= n_vertices) {
            throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                             "vertex index must be below " + std::to_string(n_vertices));
        }
        if (e.u == e.v) {
            throw ParseError(ParseErrorKind::self_loop, line_no, "vertex " + std::to_string(e.u));
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw ParseError(ParseErrorKind::duplicate_edge, line_no,
                             std::to_string(e.u) + " " + std::to_string(e.v));
        }
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(ParseErrorKind::missing_header, 0, "no \"n <vertex count>\" line found");
    return Graph(n_vertices, std::move(edges));
}

inline Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline Graph parse_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(ParseErrorKind::missing_file, 0, "cannot open " + path.string());
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& graph) {
    out << "n " << graph.n_vertices() << '\n';
    for (const auto& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace qaoa_spsa
