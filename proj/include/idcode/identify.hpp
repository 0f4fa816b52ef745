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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

struct CheckOptions {
  // Upper bound on reported witnesses. Verdicts stay exact past the cap.
  std::size_t max_witnesses = 32;
};

struct DominationCheck {
  bool ok = true;
  std::vector<Vertex> witnesses;
};

struct SeparationCheck {
  bool ok = true;
  std::vector<Edge> witnesses;
};

enum class ViolationKind { kUndominated, kUnseparated, kTwins };

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> witnesses;
};

struct CodeCertificate {
  VertexSet code;
  bool valid = true;
  std::vector<Violation> violations;
};

// Every vertex has a member of C in its closed neighbourhood.
DominationCheck is_dominating(const Graph& g, const VertexSet& c, CheckOptions options = {});
// Every vertex outside D has at least two neighbours in D.
DominationCheck is_two_dominating(const Graph& g, const VertexSet& d, CheckOptions options = {});
// Traces N[v] & C pairwise distinct. Only pairs at distance <= 2 are compared:
// farther pairs have disjoint neighbourhoods, so they collide only when both
// traces are empty, which the domination pass already counts.
SeparationCheck is_separating(const Graph& g, const VertexSet& c, CheckOptions options = {});
CodeCertificate is_identifying_code(const Graph& g, const VertexSet& c, CheckOptions options = {});
// Verdict only, no witnesses.
bool is_valid_code(const Graph& g, const VertexSet& c);

// True when some member of C lies in N[u] xor N[v].
bool separates(const Graph& g, const VertexSet& c, Vertex u, Vertex v);

struct ForcingWitness {
  Vertex u;
  Vertex v;
  Vertex forced;
};

struct ForcedReport {
  VertexSet forced;
  // One adjacent pair per forced vertex with N[u] xor N[v] = {forced}.
  std::vector<ForcingWitness> witnesses;
  std::int64_t non_forced = 0;
  std::int64_t order = 0;

  // Proportion of non-forced vertices, non_forced / order.
  double f_ratio() const { return order == 0 ? 0.0 : static_cast<double>(non_forced) / static_cast<double>(order); }
};

// Throws kTwinsPresent. Scans edges only: a pair whose symmetric difference is
// a single vertex cannot be non-adjacent, since then both endpoints would lie
// in it.
ForcedReport forced_vertices(const Graph& g);

struct HasseArc {
  Vertex from;
  Vertex to;
  // N[to] = N[from] + {label}.
  Vertex label;
};

// Covering arcs u -> v of the closed-neighbourhood inclusion order whose
// difference is a single vertex.
class HasseDigraph {
 public:
  HasseDigraph(int n, std::vector<HasseArc> arcs);

  int order() const noexcept { return n_; }
  const std::vector<HasseArc>& arcs() const noexcept { return arcs_; }
  // Arc indices.
  const std::vector<int>& out_arcs(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in_arcs(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_arcs(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_arcs(v).size()); }

  bool is_acyclic() const;

 private:
  int n_ = 0;
  std::vector<HasseArc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

HasseDigraph hasse_digraph(const Graph& g);

// v together with all its predecessors and successors.
VertexSet forced_closure(const HasseDigraph& h, Vertex v);

// Adds vertices, most open violations resolved first (ties to the lowest
// index), until C is an identifying code. Throws kTwinsPresent.
VertexSet greedy_repair(const Graph& g, const VertexSet& c);

std::string certificate_to_json(const CodeCertificate& cert);

}  // namespace idcode
