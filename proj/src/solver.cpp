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

#include "idcode/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "idcode/error.hpp"
#include "idcode/identify.hpp"
#include "json.hpp"

namespace idcode {

namespace {

using Clock = std::chrono::steady_clock;

void Dedup(ConstraintFamily& family) {
  std::vector<std::size_t> order(family.constraints.size());
  std::iota(order.begin(), order.end(), 0);
  auto& cs = family.constraints;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cs[a].members < cs[b].members; });
  std::vector<bool> keep(cs.size(), true);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (cs[order[i]].members == cs[order[i - 1]].members) keep[order[i]] = false;
  }
  std::vector<Constraint> out;
  out.reserve(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (keep[i]) out.push_back(std::move(cs[i]));
  }
  cs = std::move(out);
}

class HittingSetSearch {
 public:
  HittingSetSearch(const ConstraintFamily& family, double budget_seconds)
      : n_(family.order),
        incidence_(static_cast<std::size_t>(family.order)),
        state_(static_cast<std::size_t>(family.order), 0),
        mark_(static_cast<std::size_t>(family.order), 0),
        tally_(static_cast<std::size_t>(family.order), 0) {
    for (const auto& c : family.constraints) {
      if (c.members.empty()) Fail(ErrorCode::kTwinsPresent, "empty constraint");
      sets_.push_back(c.members);
    }
    for (std::size_t c = 0; c < sets_.size(); ++c) {
      for (Vertex v : sets_[c]) incidence_[v].push_back(static_cast<int>(c));
    }
    covered_.assign(sets_.size(), 0);
    avail_.resize(sets_.size());
    for (std::size_t c = 0; c < sets_.size(); ++c) avail_[c] = static_cast<int>(sets_[c].size());
    uncovered_ = static_cast<int>(sets_.size());
    order_.resize(sets_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return sets_[a].size() < sets_[b].size(); });
    if (budget_seconds > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget_seconds));
      has_deadline_ = true;
    }
  }

  SolveResult Run(const VertexSet& incumbent) {
    best_code_ = incumbent;
    best_size_ = incumbent.size();
    for (const auto& s : sets_) {
      if (s.size() == 1 && state_[s.front()] == 0) Include(s.front());
    }
    Dfs();
    SolveResult result;
    result.gamma = best_size_;
    result.code = best_code_;
    result.optimal = !timed_out_;
    result.nodes = nodes_;
    return result;
  }

 private:
  void Include(Vertex v) {
    state_[v] = 1;
    chosen_.push_back(v);
    for (int c : incidence_[v]) {
      --avail_[c];
      if (covered_[c]++ == 0) --uncovered_;
    }
  }

  void UndoInclude(Vertex v) {
    state_[v] = 0;
    chosen_.pop_back();
    for (int c : incidence_[v]) {
      ++avail_[c];
      if (--covered_[c] == 0) ++uncovered_;
    }
  }

  void Exclude(Vertex v) {
    state_[v] = -1;
    for (int c : incidence_[v]) --avail_[c];
  }

  void UndoExclude(Vertex v) {
    state_[v] = 0;
    for (int c : incidence_[v]) ++avail_[c];
  }

  bool OutOfTime() {
    if (timed_out_) return true;
    if (has_deadline_ && (nodes_ & 1023) == 1 && Clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  void Dfs() {
    ++nodes_;
    if (OutOfTime()) return;
    const int chosen = static_cast<int>(chosen_.size());
    if (uncovered_ == 0) {
      if (chosen < best_size_) {
        best_size_ = chosen;
        best_code_ = VertexSet(n_, chosen_);
      }
      return;
    }
    if (chosen + 1 >= best_size_) return;

    ++stamp_;
    int packing = 0;
    int branch = -1;
    int branch_avail = std::numeric_limits<int>::max();
    touched_.clear();
    for (int c : order_) {
      if (covered_[c] > 0) continue;
      if (avail_[c] == 0) return;
      if (avail_[c] < branch_avail) {
        branch_avail = avail_[c];
        branch = c;
      }
      bool disjoint = true;
      for (Vertex v : sets_[c]) {
        if (state_[v] != 0) continue;
        if (mark_[v] == stamp_) disjoint = false;
        if (tally_[v]++ == 0) touched_.push_back(v);
      }
      if (disjoint) {
        ++packing;
        for (Vertex v : sets_[c]) {
          if (state_[v] == 0) mark_[v] = stamp_;
        }
      }
    }
    int max_cover = 0;
    for (Vertex v : touched_) {
      max_cover = std::max(max_cover, tally_[v]);
      tally_[v] = 0;
    }
    const int coverage = (uncovered_ + max_cover - 1) / max_cover;
    if (chosen + std::max(packing, coverage) >= best_size_) return;

    std::vector<Vertex> candidates;
    for (Vertex v : sets_[branch]) {
      if (state_[v] == 0) candidates.push_back(v);
    }
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Include(candidates[i]);
      Dfs();
      UndoInclude(candidates[i]);
      if (timed_out_ || i + 1 == candidates.size()) break;
      Exclude(candidates[i]);
      ++excluded;
    }
    for (std::size_t i = 0; i < excluded; ++i) UndoExclude(candidates[i]);
  }

  int n_;
  std::vector<std::vector<Vertex>> sets_;
  std::vector<std::vector<int>> incidence_;
  std::vector<signed char> state_;
  std::vector<int> covered_;
  std::vector<int> avail_;
  std::vector<int> order_;
  std::vector<int> mark_;
  std::vector<int> tally_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> chosen_;
  int uncovered_ = 0;
  int stamp_ = 0;
  int best_size_ = 0;
  VertexSet best_code_;
  std::int64_t nodes_ = 0;
  bool has_deadline_ = false;
  bool timed_out_ = false;
  Clock::time_point deadline_{};
};

}  // namespace

ConstraintFamily build_domination_constraints(const Graph& g) {
  ConstraintFamily family;
  family.order = g.order();
  for (Vertex u = 0; u < g.order(); ++u) {
    family.constraints.push_back({g.closed(u).members(), ConstraintOrigin::kDomination, u, -1});
  }
  Dedup(family);
  return family;
}

ConstraintFamily build_constraints(const Graph& g) {
  ConstraintFamily family;
  family.order = g.order();
  for (Vertex u = 0; u < g.order(); ++u) {
    family.constraints.push_back({g.closed(u).members(), ConstraintOrigin::kDomination, u, -1});
  }
  for (const auto& [u, v] : distance_two_pairs(g)) {
    auto diff = (g.closed(u) ^ g.closed(v)).members();
    if (diff.empty()) {
      Fail(ErrorCode::kTwinsPresent,
           "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are twins");
    }
    family.constraints.push_back({std::move(diff), ConstraintOrigin::kSeparation, u, v});
  }
  Dedup(family);
  return family;
}

bool hits_all(const ConstraintFamily& family, const VertexSet& c) {
  return std::all_of(family.constraints.begin(), family.constraints.end(), [&](const Constraint& k) {
    return std::any_of(k.members.begin(), k.members.end(), [&](Vertex v) { return c.contains(v); });
  });
}

VertexSet greedy_hitting_set(const ConstraintFamily& family) {
  const int n = family.order;
  VertexSet chosen(n);
  std::vector<bool> covered(family.constraints.size(), false);
  std::vector<std::vector<int>> incidence(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < family.constraints.size(); ++c) {
    if (family.constraints[c].members.empty()) Fail(ErrorCode::kTwinsPresent, "empty constraint");
    for (Vertex v : family.constraints[c].members) incidence[v].push_back(static_cast<int>(c));
  }
  std::vector<int> gain(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) gain[v] = static_cast<int>(incidence[v].size());
  std::size_t remaining = family.constraints.size();
  while (remaining > 0) {
    const auto best = std::max_element(gain.begin(), gain.end());
    const auto w = static_cast<Vertex>(best - gain.begin());
    chosen.insert(w);
    for (int c : incidence[w]) {
      if (covered[c]) continue;
      covered[c] = true;
      --remaining;
      for (Vertex x : family.constraints[c].members) --gain[x];
    }
    gain[w] = -1;
  }
  return chosen;
}

VertexSet greedy_code(const Graph& g) { return greedy_hitting_set(build_constraints(g)); }

SolveResult solve_hitting_set(const ConstraintFamily& family, double budget_seconds) {
  const VertexSet incumbent = greedy_hitting_set(family);
  HittingSetSearch search(family, budget_seconds);
  return search.Run(incumbent);
}

SolveResult solve_exact(const Graph& g, double budget_seconds) {
  return solve_hitting_set(build_constraints(g), budget_seconds);
}

SolveResult solve_exact_domination(const Graph& g, double budget_seconds) {
  return solve_hitting_set(build_domination_constraints(g), budget_seconds);
}

SolveResult solve_naive(const Graph& g) {
  require_twin_free(g);
  const int n = g.order();
  SolveResult result;
  result.optimal = true;
  for (int k = 0; k <= n; ++k) {
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ++result.nodes;
      VertexSet c(n, pick);
      if (is_valid_code(g, c)) {
        result.gamma = k;
        result.code = std::move(c);
        return result;
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  Fail(ErrorCode::kInternal, "no identifying code found");
}

std::string solve_result_to_json(const SolveResult& result) {
  nlohmann::ordered_json out;
  out["gamma"] = result.gamma;
  out["optimal"] = result.optimal;
  out["code"] = result.code.members();
  out["nodes"] = result.nodes;
  return out.dump();
}

}  // namespace idcode
