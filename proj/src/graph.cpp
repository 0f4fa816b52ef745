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

#include "idcode/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "idcode/error.hpp"

namespace idcode {

namespace {

void CheckVertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    Fail(ErrorCode::kOutOfRange, "vertex " + std::to_string(v) + " out of range [0, " +
                                     std::to_string(n) + ")");
  }
}

// Groups vertices whose key lists compare equal and emits every pair inside a
// group.
std::vector<Edge> EqualKeyPairs(int n, const std::vector<std::vector<Vertex>>& keys) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
  std::vector<Edge> pairs;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && keys[order[j]] == keys[order[i]]) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        pairs.emplace_back(std::min(order[a], order[b]), std::max(order[a], order[b]));
      }
    }
    i = j;
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

struct ParsedEdgeList {
  int n = 0;
  std::vector<Edge> edges;
};

ParsedEdgeList ParseEdgeList(std::istream& in) {
  ParsedEdgeList out;
  std::string line;
  bool have_header = false;
  long long expected = 0;
  int line_no = 0;
  auto next_content_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      ++line_no;
      const auto pos = dst.find_first_not_of(" \t\r");
      if (pos == std::string::npos || dst[pos] == '#') continue;
      return true;
    }
    return false;
  };
  while (next_content_line(line)) {
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!have_header) {
      if (a < 0 || b < 0 || a > std::numeric_limits<int>::max()) {
        Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad header");
      }
      out.n = static_cast<int>(a);
      expected = b;
      have_header = true;
      out.edges.reserve(static_cast<std::size_t>(std::min<long long>(expected, 1 << 24)));
      continue;
    }
    if (a < 0 || b < 0 || a >= out.n || b >= out.n) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": vertex index out of range");
    }
    out.edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) Fail(ErrorCode::kParse, "missing 'n m' header");
  if (static_cast<long long>(out.edges.size()) != expected) {
    Fail(ErrorCode::kParse, "header announces " + std::to_string(expected) + " edges, found " +
                                std::to_string(out.edges.size()));
  }
  return out;
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges, GraphOptions options)
    : n_(n), adjacency_(static_cast<std::size_t>(n)) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  for (const auto& [u, v] : edges) {
    CheckVertex(n, u);
    CheckVertex(n, v);
    if (u == v) Fail(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  closed_.reserve(static_cast<std::size_t>(n));
  max_degree_ = 0;
  min_degree_ = n == 0 ? 0 : std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      Fail(ErrorCode::kInvalidArgument, "parallel edge at vertex " + std::to_string(v));
    }
    if (adj.empty() && !options.allow_isolated) {
      Fail(ErrorCode::kInvalidArgument, "isolated vertex " + std::to_string(v));
    }
    VertexSet nb(n, adj);
    nb.insert(v);
    closed_.push_back(std::move(nb));
    max_degree_ = std::max(max_degree_, static_cast<int>(adj.size()));
    min_degree_ = std::min(min_degree_, static_cast<int>(adj.size()));
  }
  m_ = static_cast<int>(edges.size());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), degree_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  for (const auto& [u, v] : edges_) {
    CheckVertex(n, u);
    CheckVertex(n, v);
    ++degree_[u];
    ++degree_[v];
  }
}

MultiGraph MultiGraph::FromGraph(const Graph& g) { return MultiGraph(g.order(), g.edges()); }

bool MultiGraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

bool MultiGraph::has_parallel_edges() const {
  std::vector<Edge> sorted;
  sorted.reserve(edges_.size());
  for (const auto& [u, v] : edges_) sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::optional<int> MultiGraph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const int d = degree_.front();
  for (int deg : degree_) {
    if (deg != d) return std::nullopt;
  }
  return d;
}

Graph MultiGraph::ToGraph(GraphOptions options) const { return Graph(n_, edges_, options); }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  CheckVertex(g.order(), v);
  return g.closed(v);
}

VertexSet nbhd_symmetric_difference(const Graph& g, Vertex u, Vertex v) {
  CheckVertex(g.order(), u);
  CheckVertex(g.order(), v);
  if (u == v) Fail(ErrorCode::kInvalidArgument, "symmetric difference needs distinct vertices");
  return g.closed(u) ^ g.closed(v);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[root] = 0;
    parent[root] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<std::array<Vertex, 3>> enumerate_triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.adjacent(u, w)) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

std::vector<std::array<Vertex, 4>> enumerate_four_cycles(const Graph& g) {
  std::vector<std::array<Vertex, 4>> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    const auto nb = g.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex b = nb[i];
      if (b < a) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex d = nb[j];
        for (Vertex c : g.neighbors(b)) {
          if (c > a && c != d && g.adjacent(c, d)) out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

ShortCycleCounts count_short_cycles(const Graph& g) {
  return {static_cast<std::int64_t>(enumerate_triangles(g).size()),
          static_cast<std::int64_t>(enumerate_four_cycles(g).size())};
}

std::vector<Edge> find_twins(const Graph& g) {
  std::vector<std::vector<Vertex>> keys(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) keys[v] = g.closed(v).members();
  return EqualKeyPairs(g.order(), keys);
}

std::vector<Edge> find_false_twins(const Graph& g) {
  std::vector<std::vector<Vertex>> keys(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    keys[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  return EqualKeyPairs(g.order(), keys);
}

bool is_twin_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.closed(u) == g.closed(v)) return false;
  }
  return true;
}

void require_twin_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.closed(u) == g.closed(v)) {
      Fail(ErrorCode::kTwinsPresent,
           "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are twins");
    }
  }
}

std::vector<Edge> distance_two_pairs(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::vector<std::uint64_t> keys;
  for (Vertex w = 0; w < g.order(); ++w) {
    const auto nb = g.neighbors(w);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex a = nb[i];
      keys.push_back(static_cast<std::uint64_t>(std::min(a, w)) * n +
                     static_cast<std::uint64_t>(std::max(a, w)));
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        keys.push_back(static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(nb[j]));
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Edge> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) out.emplace_back(static_cast<Vertex>(k / n), static_cast<Vertex>(k % n));
  return out;
}

Graph read_graph(std::istream& in, GraphOptions options) {
  auto parsed = ParseEdgeList(in);
  return Graph(parsed.n, parsed.edges, options);
}

MultiGraph read_multigraph(std::istream& in) {
  auto parsed = ParseEdgeList(in);
  return MultiGraph(parsed.n, std::move(parsed.edges));
}

namespace {
std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  return in;
}
}  // namespace

Graph load_graph(const std::string& path, GraphOptions options) {
  auto in = OpenForRead(path);
  return read_graph(in, options);
}

MultiGraph load_multigraph(const std::string& path) {
  auto in = OpenForRead(path);
  return read_multigraph(in);
}

void write_edge_list(std::ostream& out, int n, std::span<const Edge> edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  write_edge_list(out, g.order(), edges);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) Fail(ErrorCode::kIo, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) Fail(ErrorCode::kIo, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    Fail(ErrorCode::kIo, "cannot rename into " + path);
  }
}

}  // namespace idcode
