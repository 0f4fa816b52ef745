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

#include <string_view>

#include "idcode/graph.hpp"

namespace idcode {

Graph complete_graph(int k);
Graph cycle_graph(int k);
Graph path_graph(int k);
Graph hypercube_graph(int dimension);
Graph petersen_graph();
Graph complete_bipartite_graph(int a, int b);

// Named generators: "complete:k", "cycle:k", "path:k", "hypercube:k",
// "petersen", "bipartite:a,b". Throws kInvalidArgument for anything else.
Graph generate_graph(std::string_view spec);
// Same names plus "dipole:k" (two vertices joined by k parallel edges).
MultiGraph generate_multigraph(std::string_view spec);
bool is_generator_spec(std::string_view spec);

}  // namespace idcode
