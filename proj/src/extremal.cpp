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

#include "idcode/extremal.hpp"

#include <functional>

#include "idcode/error.hpp"
#include "json.hpp"

namespace idcode {

namespace {

int RequireRegularLoopless(const MultiGraph& h, int min_degree) {
  if (h.order() == 0) Fail(ErrorCode::kInvalidArgument, "empty skeleton graph");
  if (h.has_loops()) Fail(ErrorCode::kInvalidArgument, "skeleton graph has loops");
  const auto d = h.regular_degree();
  if (!d.has_value()) Fail(ErrorCode::kInvalidArgument, "skeleton graph is not regular");
  if (*d < min_degree) {
    Fail(ErrorCode::kInvalidArgument, "skeleton degree " + std::to_string(*d) + " < " +
                                          std::to_string(min_degree));
  }
  return *d;
}

// ports[e] = (clique slot at the first endpoint, slot at the second),
// numbered from first_slot upwards at each vertex in edge input order.
std::vector<std::pair<int, int>> AssignPorts(const MultiGraph& h, int first_slot) {
  std::vector<int> next(static_cast<std::size_t>(h.order()), first_slot);
  std::vector<std::pair<int, int>> ports;
  ports.reserve(h.edges().size());
  for (const auto& [a, b] : h.edges()) ports.emplace_back(next[a]++, next[b]++);
  return ports;
}

struct CliqueReplacement {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> partner;
  // Clique vertices joined by skeleton edge e, in endpoint order.
  std::vector<std::pair<Vertex, Vertex>> edge_ends;
};

CliqueReplacement ReplaceByCliques(const MultiGraph& h, int clique_size, int first_slot) {
  CliqueReplacement out;
  out.n = h.order() * clique_size;
  out.partner.assign(static_cast<std::size_t>(out.n), -1);
  for (Vertex v = 0; v < h.order(); ++v) {
    std::vector<Vertex> clique;
    for (int i = 0; i < clique_size; ++i) clique.push_back(v * clique_size + i);
    for (int i = 0; i < clique_size; ++i) {
      for (int j = i + 1; j < clique_size; ++j) out.edges.emplace_back(clique[i], clique[j]);
    }
    out.cliques.push_back(std::move(clique));
  }
  const auto ports = AssignPorts(h, first_slot);
  for (std::size_t e = 0; e < h.edges().size(); ++e) {
    const auto [a, b] = h.edges()[e];
    const Vertex from = out.cliques[a][ports[e].first];
    const Vertex to = out.cliques[b][ports[e].second];
    out.edges.emplace_back(from, to);
    out.partner[from] = to;
    out.partner[to] = from;
    out.edge_ends.emplace_back(from, to);
  }
  return out;
}

}  // namespace

ExtremalInstance construct_c1(const MultiGraph& h) {
  const int dh = RequireRegularLoopless(h, 2);
  auto rep = ReplaceByCliques(h, dh + 1, 1);
  ExtremalInstance out;
  out.family = "c1";
  out.graph = Graph(rep.n, rep.edges);
  out.optimal_code = VertexSet(rep.n);
  for (const auto& clique : rep.cliques) {
    for (std::size_t i = 1; i < clique.size(); ++i) out.optimal_code.insert(clique[i]);
  }
  out.claimed_gamma = h.order() * dh;
  out.cliques = std::move(rep.cliques);
  out.partner = std::move(rep.partner);
  return out;
}

ExtremalInstance construct_c2(const MultiGraph& h) {
  const int dh = RequireRegularLoopless(h, 3);
  auto rep = ReplaceByCliques(h, dh, 0);
  const int nh = h.order();

  // Every skeleton vertex picks one incident edge end so that each vertex is
  // picked across exactly once: a perfect matching in the bipartite double
  // cover, which exists because that cover is d_H-regular. The clique vertex
  // on the receiving end is the one left out of the code.
  std::vector<std::vector<std::pair<Vertex, int>>> options(static_cast<std::size_t>(nh));
  for (std::size_t e = 0; e < h.edges().size(); ++e) {
    const auto [a, b] = h.edges()[e];
    options[a].emplace_back(b, static_cast<int>(2 * e + 1));
    options[b].emplace_back(a, static_cast<int>(2 * e));
  }
  std::vector<int> matched_by(static_cast<std::size_t>(nh), -1);  // right vertex -> left vertex
  std::vector<int> via(static_cast<std::size_t>(nh), -1);         // right vertex -> edge-end id
  std::vector<int> visited(static_cast<std::size_t>(nh), -1);
  std::function<bool(Vertex, int)> augment = [&](Vertex left, int round) -> bool {
    for (const auto& [right, end] : options[left]) {
      if (visited[right] == round) continue;
      visited[right] = round;
      if (matched_by[right] < 0 || augment(matched_by[right], round)) {
        matched_by[right] = left;
        via[right] = end;
        return true;
      }
    }
    return false;
  };
  for (Vertex v = 0; v < nh; ++v) {
    if (!augment(v, v)) Fail(ErrorCode::kInternal, "no perfect matching in regular double cover");
  }

  ExtremalInstance out;
  out.family = "c2";
  out.graph = Graph(rep.n, rep.edges);
  out.optimal_code = VertexSet::Full(rep.n);
  for (Vertex w = 0; w < nh; ++w) {
    const int end = via[w];
    const auto& [first, second] = rep.edge_ends[static_cast<std::size_t>(end / 2)];
    // end encodes which side of the edge sits in K(w).
    out.optimal_code.erase(end % 2 == 1 ? second : first);
  }
  out.claimed_gamma = rep.n - nh;
  out.cliques = std::move(rep.cliques);
  out.partner = std::move(rep.partner);
  return out;
}

ExtremalInstance construct_c3(int two_k, int d) {
  if (two_k < 4 || two_k % 2 != 0) Fail(ErrorCode::kInvalidArgument, "2k must be even and >= 4");
  if (d < 3) Fail(ErrorCode::kInvalidArgument, "d must be >= 3");
  const int k = two_k / 2;
  const int side = d - 1;
  const int n = two_k * d;
  std::vector<Edge> edges;
  VertexSet code(n);
  for (int i = 1; i < two_k; i += 2) edges.emplace_back(i, (i + 1) % two_k);
  for (int copy = 0; copy < k; ++copy) {
    const int hub = 2 * copy;
    const Vertex base = two_k + copy * 2 * side;
    code.insert(hub);
    for (int a = 0; a < side; ++a) {
      edges.emplace_back(hub, base + a);
      edges.emplace_back(hub + 1, base + side + a);
      for (int b = 0; b < side; ++b) edges.emplace_back(base + a, base + side + b);
      if (a < d - 2) {
        code.insert(base + a);
        code.insert(base + side + a);
      }
    }
  }
  ExtremalInstance out;
  out.family = "c3";
  out.graph = Graph(n, edges);
  out.optimal_code = std::move(code);
  out.claimed_gamma = k + 2 * k * (d - 2);
  return out;
}

ExtremalInstance construct_ak_universal(int k) {
  if (k < 2) Fail(ErrorCode::kInvalidArgument, "k must be >= 2");
  const int n = 2 * k + 1;
  const Vertex universal = 2 * k;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 2 * k; ++i) {
    for (Vertex j = i + 1; j < 2 * k && j - i <= k - 1; ++j) edges.emplace_back(i, j);
    edges.emplace_back(i, universal);
  }
  ExtremalInstance out;
  out.family = "ak";
  out.graph = Graph(n, edges);
  out.optimal_code = VertexSet::Full(n);
  out.optimal_code.erase(universal);
  out.claimed_gamma = n - 1;
  return out;
}

std::string extremal_to_json(const ExtremalInstance& instance) {
  nlohmann::ordered_json out;
  out["family"] = instance.family;
  out["n"] = instance.graph.order();
  out["m"] = instance.graph.edge_count();
  out["max_degree"] = instance.graph.max_degree();
  out["claimed_gamma"] = instance.claimed_gamma;
  out["optimal_code"] = instance.optimal_code.members();
  return out.dump();
}

}  // namespace idcode
