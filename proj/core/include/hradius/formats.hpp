// Copyright 2026 The hradius Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hradius/graph.hpp"

namespace hradius {

class FormatError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// CR/LF are accepted. Throws FormatError on an empty string, bytes
/// outside [63, 126], a length mismatch, or nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Encodes without header or newline.
std::string to_graph6(const Graph& g);

/// Edge-list text: first non-comment line "n m", then m lines "u v" with
/// 0-based vertices. '#' starts a comment anywhere on a line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

std::string to_edge_list(const Graph& g);

}  // namespace hradius
