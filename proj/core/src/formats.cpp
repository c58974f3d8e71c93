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

#include "hradius/formats.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace hradius {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
  const auto v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) {
    throw FormatError("graph6 byte " + std::to_string(v) + " outside [63,126]");
  }
  return v - kBias;
}

char encode_byte(unsigned bits) { return static_cast<char>(bits + kBias); }

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw FormatError("empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(decode_byte(line[0]));
    pos = 1;
  } else {
    std::size_t width = 3;
    pos = 1;
    if (line.size() > 1 && line[1] == '~') {
      width = 6;
      pos = 2;
    }
    if (line.size() < pos + width) throw FormatError("truncated graph6 vertex count");
    for (std::size_t i = 0; i < width; ++i) {
      n = (n << 6) | static_cast<std::size_t>(decode_byte(line[pos + i]));
    }
    pos += width;
    if ((width == 3 && n < 63) || (width == 6 && n < 258048)) {
      throw FormatError("graph6 vertex count not in shortest form");
    }
  }

  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (line.size() - pos != expected) {
    throw FormatError("graph6 body has " + std::to_string(line.size() - pos) +
                      " bytes, expected " + std::to_string(expected) + " for n=" +
                      std::to_string(n));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int byte = decode_byte(line[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (bit % 6 != 0) {
    const int last = decode_byte(line[pos + bit / 6]);
    if ((last & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw FormatError("graph6 padding bits are not zero");
    }
  }
  // Validates the remaining bytes too.
  for (std::size_t i = pos; i < line.size(); ++i) decode_byte(line[i]);
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += encode_byte(static_cast<unsigned>(n));
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += encode_byte(static_cast<unsigned>((n >> shift) & 63));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out += encode_byte(static_cast<unsigned>((n >> shift) & 63));
    }
  }
  unsigned acc = 0;
  std::size_t filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
      if (++filled == 6) {
        out += encode_byte(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += encode_byte(acc << (6 - filled));
  return out;
}

namespace {

// Next line with comments stripped and at least one token; false at EOF.
bool next_data_line(std::istream& in, std::istringstream& tokens, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    tokens.clear();
    tokens.str(line);
    return true;
  }
  return false;
}

long long read_number(std::istringstream& tokens, std::size_t line_no, const char* what) {
  long long value = 0;
  if (!(tokens >> value)) {
    throw FormatError("line " + std::to_string(line_no) + ": expected " + what);
  }
  return value;
}

void expect_end(std::istringstream& tokens, std::size_t line_no) {
  std::string extra;
  if (tokens >> extra) {
    throw FormatError("line " + std::to_string(line_no) + ": unexpected token '" + extra + "'");
  }
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::istringstream tokens;
  std::size_t line_no = 0;
  if (!next_data_line(in, tokens, line_no)) throw FormatError("edge list is empty");
  const long long n = read_number(tokens, line_no, "vertex count n");
  const long long m = read_number(tokens, line_no, "edge count m");
  expect_end(tokens, line_no);
  if (n < 0 || m < 0) throw FormatError("negative vertex or edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_data_line(in, tokens, line_no)) {
    const long long u = read_number(tokens, line_no, "vertex u");
    const long long v = read_number(tokens, line_no, "vertex v");
    expect_end(tokens, line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw FormatError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw FormatError("header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace hradius
