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

#include "idcode/config_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "idcode/error.hpp"
#include "idcode/random.hpp"
#include "json.hpp"

namespace idcode {

namespace {

void CheckShape(int n, int d) {
  if (n <= 0 || d <= 0) Fail(ErrorCode::kInvalidArgument, "n and d must be positive");
  if (d >= n) Fail(ErrorCode::kInvalidArgument, "d must be smaller than n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
    Fail(ErrorCode::kInvalidArgument, "n*d must be even");
  }
}

MultiGraph DrawMultigraph(int n, int d, Rng& rng) {
  std::vector<int> points(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  std::iota(points.begin(), points.end(), 0);
  rng.shuffle(std::span<int>(points));
  std::vector<Edge> edges;
  edges.reserve(points.size() / 2);
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    edges.emplace_back(points[i] / d, points[i + 1] / d);
  }
  return MultiGraph(n, std::move(edges));
}

}  // namespace

MultiGraph sample_multigraph(int n, int d, std::uint64_t seed) {
  CheckShape(n, d);
  Rng rng(seed);
  return DrawMultigraph(n, d, rng);
}

SimpleSample sample_simple(int n, int d, std::uint64_t seed, int max_tries) {
  CheckShape(n, d);
  if (max_tries < 1) Fail(ErrorCode::kInvalidArgument, "max_tries must be >= 1");
  Rng rng(seed);
  for (int t = 1; t <= max_tries; ++t) {
    auto multi = DrawMultigraph(n, d, rng);
    if (multi.is_simple()) return {multi.ToGraph(), t};
  }
  Fail(ErrorCode::kMaxTriesExhausted,
       "no simple graph within " + std::to_string(max_tries) + " tries");
}

SimpleSample sample_simple_pairing(int n, int d, std::uint64_t seed, int max_tries) {
  CheckShape(n, d);
  if (max_tries < 1) Fail(ErrorCode::kInvalidArgument, "max_tries must be >= 1");
  Rng rng(seed);
  for (int t = 1; t <= max_tries; ++t) {
    std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      for (Vertex v = 0; v < n; ++v) stubs.push_back(v);
    }
    auto linked = [&](Vertex a, Vertex b) {
      const auto& row = adjacency[a];
      return std::find(row.begin(), row.end(), b) != row.end();
    };
    bool failed = false;
    while (!stubs.empty()) {
      rng.shuffle(std::span<Vertex>(stubs));
      std::vector<int> leftover(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const Vertex a = std::min(stubs[i], stubs[i + 1]);
        const Vertex b = std::max(stubs[i], stubs[i + 1]);
        if (a != b && !linked(a, b)) {
          adjacency[a].push_back(b);
          adjacency[b].push_back(a);
          edges.emplace_back(a, b);
        } else {
          ++leftover[a];
          ++leftover[b];
        }
      }
      stubs.clear();
      std::vector<Vertex> open;
      for (Vertex v = 0; v < n; ++v) {
        if (leftover[v] == 0) continue;
        open.push_back(v);
        for (int k = 0; k < leftover[v]; ++k) stubs.push_back(v);
      }
      bool joinable = false;
      for (std::size_t i = 0; i < open.size() && !joinable; ++i) {
        for (std::size_t j = i + 1; j < open.size() && !joinable; ++j) {
          joinable = !linked(open[i], open[j]);
        }
      }
      if (!stubs.empty() && !joinable) {
        failed = true;
        break;
      }
    }
    if (!failed) return {Graph(n, edges), t};
  }
  Fail(ErrorCode::kMaxTriesExhausted,
       "pairing failed " + std::to_string(max_tries) + " times");
}

SimpleSample sample_regular(int n, int d, std::uint64_t seed, SimpleSampler sampler, int max_tries) {
  if (sampler == SimpleSampler::kAuto) sampler = d <= 5 ? SimpleSampler::kRejection : SimpleSampler::kPairing;
  return sampler == SimpleSampler::kRejection ? sample_simple(n, d, seed, max_tries)
                                              : sample_simple_pairing(n, d, seed, max_tries);
}

SampleStats cycle_statistics(int n, int d, std::uint64_t seed, StatsBudget budget) {
  CheckShape(n, d);
  SampleStats stats;
  stats.n = n;
  stats.d = d;
  std::int64_t sum_x3 = 0;
  std::int64_t sum_x4 = 0;
  std::int64_t with_twins = 0;
  for (std::int64_t t = 0; t < budget.max_trials; ++t) {
    if (budget.target_accepted > 0 && stats.accepted_simple >= budget.target_accepted) break;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    auto multi = DrawMultigraph(n, d, rng);
    ++stats.trials;
    if (!multi.is_simple()) continue;
    const Graph g = multi.ToGraph();
    ++stats.accepted_simple;
    const auto counts = count_short_cycles(g);
    sum_x3 += counts.x3;
    sum_x4 += counts.x4;
    if (!is_twin_free(g)) ++with_twins;
  }
  if (stats.trials > 0) {
    stats.acceptance_rate = static_cast<double>(stats.accepted_simple) / static_cast<double>(stats.trials);
  }
  if (stats.accepted_simple > 0) {
    const auto acc = static_cast<double>(stats.accepted_simple);
    stats.mean_x3 = static_cast<double>(sum_x3) / acc;
    stats.mean_x4 = static_cast<double>(sum_x4) / acc;
    stats.twin_fraction = static_cast<double>(with_twins) / acc;
  }
  const double dm1 = d - 1.0;
  stats.expected_x3 = dm1 * dm1 * dm1 / 6.0;
  stats.expected_x4 = dm1 * dm1 * dm1 * dm1 / 8.0;
  stats.expected_acceptance = std::exp((1.0 - static_cast<double>(d) * d) / 4.0);
  stats.twin_reference = static_cast<double>(n) * d / 2.0 * std::pow(static_cast<double>(d) / n, d - 1.0);
  return stats;
}

std::string sample_stats_to_json(const SampleStats& stats) {
  nlohmann::ordered_json out;
  out["n"] = stats.n;
  out["d"] = stats.d;
  out["trials"] = stats.trials;
  out["accepted_simple"] = stats.accepted_simple;
  out["acceptance_rate"] = stats.acceptance_rate;
  out["mean_x3"] = stats.mean_x3;
  out["mean_x4"] = stats.mean_x4;
  out["twin_fraction"] = stats.twin_fraction;
  out["expected_x3"] = stats.expected_x3;
  out["expected_x4"] = stats.expected_x4;
  out["expected_acceptance"] = stats.expected_acceptance;
  out["twin_reference"] = stats.twin_reference;
  return out.dump();
}

}  // namespace idcode
