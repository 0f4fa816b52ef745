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
#include <vector>

#include "idcode/graph.hpp"

namespace idcode {

inline constexpr int kCorpusMaxOrder = 8;

struct CorpusEntry {
  Graph graph;  // built with allow_isolated so that K1 is representable
  bool twin_free = false;
  std::uint64_t canonical_code = 0;
};

// Canonical upper-triangle adjacency code for graphs with at most 8 vertices:
// equal codes exactly for isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

// All connected graphs with 1..max_n vertices up to isomorphism, ordered by
// order and then canonical code. Throws kCapExceeded above kCorpusMaxOrder.
std::vector<CorpusEntry> corpus_enumerate(int max_n);

}  // namespace idcode
