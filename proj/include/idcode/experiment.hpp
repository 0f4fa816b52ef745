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

#include "idcode/bounds.hpp"
#include "idcode/graph.hpp"

namespace idcode {

inline constexpr int kReportSchemaVersion = 1;

// Draws sample_regular graphs until one is twin-free.
// Attempt a uses stream derive_seed(seed, a). Throws kMaxTriesExhausted.
Graph sample_twin_free_regular(int n, int d, std::uint64_t seed, int max_attempts = 200);

enum class ExperimentKind { kTable1, kDomination };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kTable1;
  std::vector<int> orders{2000};
  int d = 10;
  int trials = 5;
  std::uint64_t seed = 0;
  // table1: any of rrg, lll, girth5, greedy.
  std::vector<std::string> methods{"rrg", "lll", "girth5", "greedy"};
  double budget_seconds = 60.0;  // domination: per exact solve
  bool timings = false;          // per-trial wall time, breaks byte identity
  int threads = 0;               // 0: IDCODE_THREADS or hardware concurrency
};

struct TrialRecord {
  int n = 0;
  int trial = 0;
  std::string method;
  bool skipped = false;
  std::string skip_reason;
  int size = 0;  // code size, or the dominating-set size for kDomination
  double ratio = 0.0;
  bool valid = false;
  bool optimal = true;  // kDomination only
  bool met_size_target = false;
  double reference = 0.0;
  double millis = 0.0;
};

struct MethodAggregate {
  int n = 0;
  std::string method;
  int runs = 0;
  int skipped = 0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> records;  // ordered by (n, trial, method index)
  std::vector<MethodAggregate> aggregates;
  std::vector<std::pair<int, std::vector<ReferenceValue>>> references;  // per order
};

int resolve_thread_count(int requested);
ExperimentReport run_experiment(const ExperimentConfig& config);
std::string experiment_to_json(const ExperimentReport& report, const std::string& timestamp);
std::string experiment_to_csv(const ExperimentReport& report);
std::string utc_timestamp();

}  // namespace idcode
