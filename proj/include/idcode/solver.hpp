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
#include <string_view>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

enum class ConstraintOrigin { kDomination, kSeparation };

struct Constraint {
  std::vector<Vertex> members;  // sorted
  ConstraintOrigin origin;
  Vertex u;
  Vertex v;  // -1 for domination constraints
};

// A set C is an identifying code exactly when it hits every constraint:
// N[u] for all u, and N[u] xor N[v] for all pairs at distance <= 2.
struct ConstraintFamily {
  int order = 0;
  std::vector<Constraint> constraints;
};

// Deduplicated. Throws kTwinsPresent when some symmetric difference is empty.
ConstraintFamily build_constraints(const Graph& g);
ConstraintFamily build_domination_constraints(const Graph& g);

bool hits_all(const ConstraintFamily& family, const VertexSet& c);

struct SolveResult {
  int gamma = 0;
  VertexSet code;
  // False when the time budget ran out; gamma is then the best incumbent.
  bool optimal = false;
  std::int64_t nodes = 0;
};

// Minimum hitting set by branch and bound: singleton constraints are taken
// up front, branching is on the uncovered constraint with the fewest free
// vertices (lowest vertex first), and the bound is the larger of a disjoint
// packing of uncovered constraints and a max-coverage count. Seeded with
// greedy_code. A budget <= 0 means unlimited.
SolveResult solve_exact(const Graph& g, double budget_seconds);
SolveResult solve_exact_domination(const Graph& g, double budget_seconds);
SolveResult solve_hitting_set(const ConstraintFamily& family, double budget_seconds);

// Ascending-size subset search using the verifier directly.
SolveResult solve_naive(const Graph& g);

// Greedy set cover over the constraint family; ties go to the lowest vertex.
VertexSet greedy_code(const Graph& g);
VertexSet greedy_hitting_set(const ConstraintFamily& family);

std::string solve_result_to_json(const SolveResult& result);

}  // namespace idcode
