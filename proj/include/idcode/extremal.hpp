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

#include <string>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/vertex_set.hpp"

namespace idcode {

// A graph from one of the tight families together with a code of the size
// the family is known to need.
struct ExtremalInstance {
  std::string family;  // "c1", "c2", "c3" or "ak"
  Graph graph;
  VertexSet optimal_code;
  int claimed_gamma = 0;
  // Clique-replacement families only: cliques[v] lists K(v) in port order
  // (k_0(v) first for c1) and partner[x] is the vertex across x's external
  // edge, or -1.
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> partner;
};

// Each vertex v of a d_H-regular loopless multigraph becomes a clique of
// d_H + 1 vertices; ports 1..d_H take the external edges, k_0(v) stays
// internal. Ports are assigned by walking H's edges in input order and
// taking the lowest free port at each end.
ExtremalInstance construct_c1(const MultiGraph& h);
// As c1 with cliques of d_H vertices and no internal port; needs d_H >= 3.
ExtremalInstance construct_c2(const MultiGraph& h);
// 2k hub vertices matched c_i c_{i+1} for odd i, and for each even i a copy
// of K_{d-1,d-1} with one side joined to c_i and the other to c_{i+1}.
ExtremalInstance construct_c3(int two_k, int d);
// The (k-1)-th power of P_{2k} plus a universal vertex.
ExtremalInstance construct_ak_universal(int k);

std::string extremal_to_json(const ExtremalInstance& instance);

}  // namespace idcode
