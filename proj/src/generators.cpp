// Copyright 2026 The idcode Authors.
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

#include "idcode/generators.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "idcode/error.hpp"

namespace idcode {

namespace {

int ParsePositive(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value <= 0) {
    Fail(ErrorCode::kInvalidArgument, "bad generator parameter in '" + std::string(spec) + "'");
  }
  return value;
}

void RequireAtLeast(int value, int minimum, std::string_view what) {
  if (value < minimum) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " needs parameter >= " + std::to_string(minimum));
  }
}

}  // namespace

Graph complete_graph(int k) {
  RequireAtLeast(k, 2, "complete");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph(k, edges);
}

Graph cycle_graph(int k) {
  RequireAtLeast(k, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) edges.emplace_back(u, (u + 1) % k);
  return Graph(k, edges);
}

Graph path_graph(int k) {
  RequireAtLeast(k, 2, "path");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < k; ++u) edges.emplace_back(u, u + 1);
  return Graph(k, edges);
}

Graph hypercube_graph(int dimension) {
  RequireAtLeast(dimension, 1, "hypercube");
  if (dimension > 20) Fail(ErrorCode::kInvalidArgument, "hypercube dimension too large");
  const int n = 1 << dimension;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (int bit = 0; bit < dimension; ++bit) {
      const Vertex v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  RequireAtLeast(a, 1, "bipartite");
  RequireAtLeast(b, 1, "bipartite");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

Graph generate_graph(std::string_view spec) {
  if (spec == "petersen") return petersen_graph();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    Fail(ErrorCode::kInvalidArgument, "unknown generator '" + std::string(spec) + "'");
  }
  const auto name = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (name == "complete") return complete_graph(ParsePositive(arg, spec));
  if (name == "cycle") return cycle_graph(ParsePositive(arg, spec));
  if (name == "path") return path_graph(ParsePositive(arg, spec));
  if (name == "hypercube") return hypercube_graph(ParsePositive(arg, spec));
  if (name == "bipartite") {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) {
      const int d = ParsePositive(arg, spec);
      return complete_bipartite_graph(d, d);
    }
    return complete_bipartite_graph(ParsePositive(arg.substr(0, comma), spec),
                                    ParsePositive(arg.substr(comma + 1), spec));
  }
  Fail(ErrorCode::kInvalidArgument, "unknown generator '" + std::string(spec) + "'");
}

MultiGraph generate_multigraph(std::string_view spec) {
  if (spec.starts_with("dipole:")) {
    const int k = ParsePositive(spec.substr(7), spec);
    return MultiGraph(2, std::vector<Edge>(static_cast<std::size_t>(k), Edge{0, 1}));
  }
  return MultiGraph::FromGraph(generate_graph(spec));
}

bool is_generator_spec(std::string_view spec) {
  if (spec == "petersen") return true;
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return false;
  const auto name = spec.substr(0, colon);
  return name == "complete" || name == "cycle" || name == "path" || name == "hypercube" ||
         name == "bipartite" || name == "dipole";
}

}  // namespace idcode
