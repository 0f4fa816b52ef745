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

#include <vector>

#include "idcode/corpus.hpp"
#include "idcode/error.hpp"
#include "idcode/generators.hpp"
#include "idcode/graph.hpp"

namespace fixtures {

// K_{3,3} with sides {0,1,2} and {3,4,5}.
inline idcode::Graph K33() { return idcode::complete_bipartite_graph(3, 3); }
inline idcode::Graph P3() { return idcode::path_graph(3); }
inline idcode::Graph K2() { return idcode::complete_graph(2); }

// Connected twin-free graphs with an edge, orders 2..max_n.
inline std::vector<idcode::Graph> TwinFreeCorpus(int max_n) {
  std::vector<idcode::Graph> out;
  for (auto& e : idcode::corpus_enumerate(max_n)) {
    if (e.twin_free && e.graph.edge_count() > 0) out.push_back(e.graph);
  }
  return out;
}

inline std::vector<idcode::Graph> ConnectedCorpus(int max_n) {
  std::vector<idcode::Graph> out;
  for (auto& e : idcode::corpus_enumerate(max_n)) out.push_back(e.graph);
  return out;
}

}  // namespace fixtures

#define CHECK_ERROR_CODE(expr, expected)                                    \
  do {                                                                      \
    bool thrown_ = false;                                                   \
    try {                                                                   \
      (void)(expr);                                                         \
    } catch (const idcode::Error& e_) {                                     \
      thrown_ = true;                                                       \
      CHECK(e_.code() == (expected));                                       \
    }                                                                       \
    CHECK_MESSAGE(thrown_, "expected an idcode::Error from " #expr);        \
  } while (false)
