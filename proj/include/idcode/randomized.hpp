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

#include <cstdint>
#include <string>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/random.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

// Parameters of the local-lemma sampler for a graph of maximum degree d whose
// proportion of non-forced vertices is f.
struct LllParameters {
  int d = 3;
  double f_ratio = 1.0;
  double k = 0.0;            // 99 ln 2 / (2 f)
  double p = 0.0;            // 1 / (k d)
  double size_target = 0.0;  // f^2 n / (103 d)
  // Per-vertex participation caps for events of type A, B, C and D.
  std::int64_t max_events_a = 0;  // d + 1
  std::int64_t max_events_b = 0;  // d (d - 1)
  std::int64_t max_events_c = 0;  // d^2 (d - 1)
  std::int64_t max_events_d = 0;  // d - 1
  // (d+1)(2p)^2 + d(d-1)(2p)^2 + d^2(d-1)(2p)^3 + (d-1)(2p)^2, must be <= 1/2.
  double dependency_sum = 0.0;
};

LllParameters lll_parameters(int d, double f_ratio, double n);

enum class BadEventType { kA = 0, kB = 1, kC = 2, kD = 3 };

// Event weight t = |V(E)|: j for A^j, B^j, C^j and 2 for D.
int bad_event_weight(BadEventType type, int j);

struct BadEvent {
  BadEventType type;
  Vertex u;
  Vertex v;  // -1 for type A
  std::vector<Vertex> support;  // V(E), all of which lie in S when it occurs
};

// Every occurring event, sorted by (type, u, v). S must avoid forced
// vertices.
std::vector<BadEvent> occurring_bad_events(const Graph& g, const VertexSet& s);

struct ConstructorResult {
  std::string method;
  VertexSet code;
  VertexSet removed;  // V minus code
  int restarts_used = 0;
  std::int64_t resamples_used = 0;
  std::int64_t shrink_steps = 0;
  bool met_size_target = false;
  double size_target = 0.0;
  // Alteration-based constructors.
  std::string mode;
  double probability = 0.0;
  bool probability_clamped = false;
  int sampled = 0;         // |S|
  int two_dom_added = 0;   // |T \ S|
  int edge_repairs = 0;    // vertices added for isolated edges of G[D]
  std::int64_t risky_edges = 0;  // edges with N[u] xor N[v] disjoint from S
  int triangle_added = 0;
  int four_cycle_added = 0;
  int safety_net_added = 0;
};

struct LllOptions {
  std::uint64_t seed = 0;
  std::int64_t max_resamples = 100000;  // per restart
  int max_restarts = 100;
};

// Removes a random set S of non-forced vertices. While a bad event occurs its
// support is resampled; once the resample budget is spent, one vertex of the
// support is dropped instead, which always terminates. Restarts with fresh
// streams until |S| reaches the size target. Throws kTwinsPresent.
ConstructorResult lll_construct(const Graph& g, const LllOptions& options);

enum class Girth5Mode { kCase1, kCase2 };

// (ln delta + ln ln delta) / delta, clamped to 0.999.
double girth5_probability(int delta, bool* clamped = nullptr);

struct TwoDominatingSample {
  VertexSet s;
  VertexSet d;  // S plus every vertex with fewer than two members of S in N[v]
};

TwoDominatingSample sample_two_dominating(const Graph& g, double p, Rng& rng);
std::vector<Edge> isolated_edges(const Graph& g, const VertexSet& d);
// Adds the lowest neighbour of either endpoint for every isolated edge of
// G[D]; returns the number of vertices added.
int repair_isolated_edges(const Graph& g, VertexSet& d);

// Requires girth >= 5 and minimum degree >= 3.
ConstructorResult girth5_construct(const Graph& g, std::uint64_t seed, Girth5Mode mode);
// Alteration sample, then explicit repairs for triangles and 4-cycles, then
// greedy_repair. Works on any twin-free graph with maximum degree >= 3.
ConstructorResult rrg_construct(const Graph& g, std::uint64_t seed);

std::string constructor_result_to_json(const ConstructorResult& result);

}  // namespace idcode
