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

#include "idcode/corpus.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "idcode/error.hpp"

namespace idcode {

namespace {

using Matrix = std::array<std::uint8_t, kCorpusMaxOrder>;  // row bitmasks

int PairBit(int i, int j, int n) {
  // Index of (i, j), i < j, in row-major upper-triangle order.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t EncodeRelabelled(const Matrix& adj, int n, const std::vector<int>& position_of) {
  std::vector<int> vertex_at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertex_at[position_of[v]] = v;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((adj[vertex_at[i]] >> vertex_at[j]) & 1U) code |= std::uint64_t{1} << PairBit(i, j, n);
    }
  }
  return code;
}

// Ordered partition as cell index per vertex. Splits cells by neighbour
// counts into every cell until stable; the resulting order depends only on
// the isomorphism class of (graph, starting partition).
std::vector<int> Refine(const Matrix& adj, int n, std::vector<int> cell) {
  while (true) {
    const int cells = *std::max_element(cell.begin(), cell.end()) + 1;
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.assign(static_cast<std::size_t>(cells) + 1, 0);
      sig[0] = cell[v];
      for (int w = 0; w < n; ++w) {
        if ((adj[v] >> w) & 1U) ++sig[static_cast<std::size_t>(cell[w]) + 1];
      }
    }
    std::set<std::vector<int>> distinct(signature.begin(), signature.end());
    if (static_cast<int>(distinct.size()) == cells) return cell;
    std::map<std::vector<int>, int> rank;
    for (const auto& sig : distinct) rank.emplace(sig, static_cast<int>(rank.size()));
    for (int v = 0; v < n; ++v) cell[v] = rank[signature[v]];
  }
}

void Search(const Matrix& adj, int n, std::vector<int> cell, std::uint64_t& best) {
  cell = Refine(adj, n, std::move(cell));
  const int cells = *std::max_element(cell.begin(), cell.end()) + 1;
  if (cells == n) {
    best = std::min(best, EncodeRelabelled(adj, n, cell));
    return;
  }
  // First non-singleton cell in partition order.
  std::vector<int> size(static_cast<std::size_t>(cells), 0);
  for (int v = 0; v < n; ++v) ++size[cell[v]];
  int target = 0;
  while (size[target] == 1) ++target;
  for (int v = 0; v < n; ++v) {
    if (cell[v] != target) continue;
    // Individualise v: it keeps slot `target`, everything after shifts up.
    std::vector<int> next = cell;
    for (int w = 0; w < n; ++w) {
      if (next[w] > target || (next[w] == target && w != v)) ++next[w];
    }
    Search(adj, n, std::move(next), best);
  }
}

Matrix ToMatrix(const Graph& g) {
  Matrix adj{};
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= static_cast<std::uint8_t>(1U << v);
    adj[v] |= static_cast<std::uint8_t>(1U << u);
  }
  return adj;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kCorpusMaxOrder) Fail(ErrorCode::kCapExceeded, "canonical form limited to 8 vertices");
  if (n <= 1) return 0;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  Search(ToMatrix(g), n, std::vector<int>(static_cast<std::size_t>(n), 0), best);
  return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((code >> PairBit(i, j, n)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges, GraphOptions{.allow_isolated = true});
}

std::vector<CorpusEntry> corpus_enumerate(int max_n) {
  if (max_n > kCorpusMaxOrder) {
    Fail(ErrorCode::kCapExceeded, "corpus order " + std::to_string(max_n) + " exceeds cap " +
                                      std::to_string(kCorpusMaxOrder));
  }
  if (max_n < 1) Fail(ErrorCode::kInvalidArgument, "max_n must be >= 1");
  std::vector<CorpusEntry> out;
  // Every connected graph on n vertices arises from one on n-1 vertices by
  // attaching a new vertex: delete a leaf of a spanning tree.
  std::vector<std::uint64_t> level{0};
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) {
      std::set<std::uint64_t> next;
      for (std::uint64_t code : level) {
        const Graph base = graph_from_code(n - 1, code);
        auto edges = base.edges();
        for (unsigned mask = 1; mask < (1U << (n - 1)); ++mask) {
          auto grown = edges;
          for (int v = 0; v < n - 1; ++v) {
            if ((mask >> v) & 1U) grown.emplace_back(v, n - 1);
          }
          next.insert(canonical_code(Graph(n, grown, GraphOptions{.allow_isolated = true})));
        }
      }
      level.assign(next.begin(), next.end());
    }
    for (std::uint64_t code : level) {
      CorpusEntry entry;
      entry.graph = graph_from_code(n, code);
      entry.twin_free = is_twin_free(entry.graph);
      entry.canonical_code = code;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

}  // namespace idcode
