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

#include "idcode/graph.hpp"

namespace idcode {

// Uniform perfect matching on n cells of d points: shuffle the n*d points and
// pair them consecutively. Loops and parallel edges are kept.
MultiGraph sample_multigraph(int n, int d, std::uint64_t seed);

struct SimpleSample {
  Graph graph;
  int tries = 0;  // multigraphs drawn, including the accepted one
};

// Rejection sampling until the multigraph is simple. Throws
// kMaxTriesExhausted.
SimpleSample sample_simple(int n, int d, std::uint64_t seed, int max_tries);

// Incremental pairing: shuffle the free points, keep every pair that adds a
// new non-loop edge and reshuffle the rest; restart when no free pair can be
// joined. Asymptotically uniform for fixed d, and usable where rejection is
// not (the acceptance rate decays like exp((1 - d^2) / 4)).
SimpleSample sample_simple_pairing(int n, int d, std::uint64_t seed, int max_tries);

enum class SimpleSampler { kAuto, kRejection, kPairing };

// kAuto uses rejection for d <= 5 and pairing above.
SimpleSample sample_regular(int n, int d, std::uint64_t seed, SimpleSampler sampler = SimpleSampler::kAuto,
                            int max_tries = 100000);

struct SampleStats {
  int n = 0;
  int d = 0;
  std::int64_t trials = 0;           // multigraphs drawn
  std::int64_t accepted_simple = 0;
  double acceptance_rate = 0.0;
  double mean_x3 = 0.0;              // over accepted simple graphs
  double mean_x4 = 0.0;
  double twin_fraction = 0.0;        // accepted graphs having a twin pair
  // Limiting values for comparison; not guarantees at finite n.
  double expected_x3 = 0.0;          // (d-1)^3 / 6
  double expected_x4 = 0.0;          // (d-1)^4 / 8
  double expected_acceptance = 0.0;  // exp((1 - d^2) / 4)
  double twin_reference = 0.0;       // (nd/2) (d/n)^(d-1)
};

struct StatsBudget {
  std::int64_t max_trials = 1000;
  // When positive, stop as soon as this many simple graphs were accepted.
  std::int64_t target_accepted = 0;
};

// Trial t draws from the stream derive_seed(seed, t).
SampleStats cycle_statistics(int n, int d, std::uint64_t seed, StatsBudget budget);

std::string sample_stats_to_json(const SampleStats& stats);

}  // namespace idcode
