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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idcode/vertex_set.hpp"

namespace idcode {

using Edge = std::pair<Vertex, Vertex>;

struct GraphOptions {
  // Graphs with isolated vertices are rejected unless this is set; every
  // bound in the library assumes there are none.
  bool allow_isolated = false;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; the
// closed neighbourhoods are materialised as bitsets so that the separation
// and forcing queries reduce to word operations.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::span<const Edge> edges, GraphOptions options = {});

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  const VertexSet& closed(Vertex v) const { return closed_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const { return u != v && closed(u).contains(v); }

  int max_degree() const noexcept { return max_degree_; }
  int min_degree() const noexcept { return min_degree_; }
  double average_degree() const noexcept { return n_ == 0 ? 0.0 : 2.0 * m_ / n_; }
  bool is_regular() const noexcept { return max_degree_ == min_degree_; }

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  int max_degree_ = 0;
  int min_degree_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> closed_;
};

// Loopless multigraph used as the skeleton of the clique-replacement
// constructions. The configuration model may also produce loops; those are
// representable here and reported through has_loops().
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int n, std::vector<Edge> edges);

  static MultiGraph FromGraph(const Graph& g);

  int order() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Loops count twice.
  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  bool has_loops() const noexcept;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }
  // Common degree when regular.
  std::optional<int> regular_degree() const;

  Graph ToGraph(GraphOptions options = {}) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
};

VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet nbhd_symmetric_difference(const Graph& g, Vertex u, Vertex v);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct ShortCycleCounts {
  std::int64_t x3 = 0;
  std::int64_t x4 = 0;
};

// Each cycle is counted once as a subgraph (a K4 holds four triangles and
// three 4-cycles).
ShortCycleCounts count_short_cycles(const Graph& g);
std::vector<std::array<Vertex, 3>> enumerate_triangles(const Graph& g);
// Returned in cyclic order a-b-c-d-a with a the smallest vertex and b < d.
std::vector<std::array<Vertex, 4>> enumerate_four_cycles(const Graph& g);

std::vector<Edge> find_twins(const Graph& g);
std::vector<Edge> find_false_twins(const Graph& g);
bool is_twin_free(const Graph& g);
void require_twin_free(const Graph& g);

// All pairs u < v with dist(u, v) <= 2, sorted.
std::vector<Edge> distance_two_pairs(const Graph& g);

// Edge-list text format: '#' comment lines, a header "n m", then m lines
// "u v" with 0-based indices. Repeated lines are parallel edges for
// multigraphs and an error for simple graphs.
Graph read_graph(std::istream& in, GraphOptions options = {});
MultiGraph read_multigraph(std::istream& in);
Graph load_graph(const std::string& path, GraphOptions options = {});
MultiGraph load_multigraph(const std::string& path);
void write_edge_list(std::ostream& out, int n, std::span<const Edge> edges);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);
// Writes through a temporary file and renames it into place.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace idcode
