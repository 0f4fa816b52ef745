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

namespace idcode {

struct BoundReport {
  int log_lower = 0;      // ceil(log2(n + 1))
  int degree_lower = 0;   // ceil(2n / (d + 2)), d the maximum degree
  int forced_lower = 0;   // number of forced vertices
  int best_lower = 0;
  int trivial_upper = 0;  // n - 1
};

// Requires a twin-free graph with at least one edge.
BoundReport lower_bounds(const Graph& g);

struct BetaGamma {
  std::uint64_t beta = 0;
  std::uint64_t gamma = 0;
};

// beta(k) = sum_{i=0}^{k-2} (2k-3)^i bounds the forced closure of a vertex in
// a K_k-free graph; gamma(k) = k*beta + C(k*beta, 2). Throws for k < 3 or on
// 64-bit overflow.
BetaGamma beta_gamma(int k);

struct ReferenceValue {
  std::string name;
  std::string formula;
  double value = 0.0;
  // Main term of an asymptotic statement: carries unknown lower-order terms
  // and must not be used as a guarantee.
  bool asymptotic = false;
};

struct TheoremInputs {
  double n = 0;
  int d = 3;           // maximum degree
  double f_ratio = 1;  // proportion of non-forced vertices
  int delta = 3;       // minimum degree
};

std::vector<ReferenceValue> theorem_upper_bounds(const TheoremInputs& in);

std::string bound_report_to_json(const BoundReport& report);
std::string reference_values_to_json(const std::vector<ReferenceValue>& values);
std::string reference_values_to_csv(const std::vector<ReferenceValue>& values);

}  // namespace idcode
