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

#include "idcode/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "idcode/error.hpp"
#include "idcode/identify.hpp"
#include "json.hpp"

namespace idcode {

namespace {

bool ClosedSubsetOf(const Graph& g, Vertex u, const VertexSet& s) {
  if (!s.contains(u)) return false;
  for (Vertex w : g.neighbors(u)) {
    if (!s.contains(w)) return false;
  }
  return true;
}

// N[u] xor N[v] as a sorted list.
std::vector<Vertex> SymmetricDifference(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  auto side = [&](Vertex a, Vertex b) {
    if (!g.closed(b).contains(a)) out.push_back(a);
    for (Vertex x : g.neighbors(a)) {
      if (!g.closed(b).contains(x)) out.push_back(x);
    }
  };
  side(u, v);
  side(v, u);
  std::sort(out.begin(), out.end());
  return out;
}

bool AllIn(const std::vector<Vertex>& xs, const VertexSet& s) {
  return std::all_of(xs.begin(), xs.end(), [&](Vertex x) { return s.contains(x); });
}

void Resample(const std::vector<Vertex>& support, const VertexSet& eligible, double p, Rng& rng,
              VertexSet& s) {
  for (Vertex x : support) {
    if (!eligible.contains(x)) continue;
    if (rng.bernoulli(p)) {
      s.insert(x);
    } else {
      s.erase(x);
    }
  }
}

VertexSet Complement(const VertexSet& s) { return VertexSet::Full(s.universe()) - s; }

void VerifyOrThrow(const Graph& g, const VertexSet& code, const char* method) {
  if (!is_valid_code(g, code)) {
    Fail(ErrorCode::kInternal, std::string(method) + " produced an invalid code");
  }
}

}  // namespace

LllParameters lll_parameters(int d, double f_ratio, double n) {
  if (d < 3) Fail(ErrorCode::kInvalidArgument, "maximum degree must be >= 3");
  if (!(f_ratio > 0.0 && f_ratio <= 1.0)) Fail(ErrorCode::kInvalidArgument, "f must lie in (0, 1]");
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative order");
  LllParameters out;
  out.d = d;
  out.f_ratio = f_ratio;
  out.k = 99.0 * std::numbers::ln2 / (2.0 * f_ratio);
  out.p = 1.0 / (out.k * d);
  out.size_target = f_ratio * f_ratio * n / (103.0 * d);
  const std::int64_t dd = d;
  out.max_events_a = dd + 1;
  out.max_events_b = dd * (dd - 1);
  out.max_events_c = dd * dd * (dd - 1);
  out.max_events_d = dd - 1;
  const double q = 2.0 * out.p;
  out.dependency_sum = static_cast<double>(out.max_events_a) * q * q +
                       static_cast<double>(out.max_events_b) * q * q +
                       static_cast<double>(out.max_events_c) * q * q * q +
                       static_cast<double>(out.max_events_d) * q * q;
  if (out.k < 30.0 || out.p > 0.25 || out.dependency_sum > 0.5) {
    Fail(ErrorCode::kInternal, "local lemma conditions violated");
  }
  return out;
}

int bad_event_weight(BadEventType type, int j) { return type == BadEventType::kD ? 2 : j; }

std::vector<BadEvent> occurring_bad_events(const Graph& g, const VertexSet& s) {
  std::vector<BadEvent> events;
  const auto members = s.members();
  // A: N[u] inside S; u then lies in N[x] for any x in S.
  VertexSet seen(g.order());
  for (Vertex x : members) {
    auto visit = [&](Vertex u) {
      if (seen.contains(u)) return;
      seen.insert(u);
      if (ClosedSubsetOf(g, u, s)) events.push_back({BadEventType::kA, u, -1, g.closed(u).members()});
    };
    visit(x);
    for (Vertex u : g.neighbors(x)) visit(u);
  }
  // B: adjacent u, v with N[u] xor N[v] inside S. Some x in S lies in N[u]
  // minus N[v], so u is in N[x] and v is a neighbour of u.
  std::vector<std::pair<Vertex, Vertex>> tried;
  for (Vertex x : members) {
    auto from = [&](Vertex u) {
      for (Vertex v : g.neighbors(u)) {
        tried.emplace_back(std::min(u, v), std::max(u, v));
      }
    };
    from(x);
    for (Vertex u : g.neighbors(x)) from(u);
  }
  std::sort(tried.begin(), tried.end());
  tried.erase(std::unique(tried.begin(), tried.end()), tried.end());
  for (const auto& [u, v] : tried) {
    auto diff = SymmetricDifference(g, u, v);
    if (!diff.empty() && AllIn(diff, s)) events.push_back({BadEventType::kB, u, v, std::move(diff)});
  }
  // C and D: u, v at distance two are both in their own symmetric
  // difference, so both lie in S.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex u = members[i];
      const Vertex v = members[j];
      if (g.adjacent(u, v) || !g.closed(u).intersects(g.closed(v))) continue;
      auto diff = SymmetricDifference(g, u, v);
      if (!AllIn(diff, s)) continue;
      const auto type = diff.size() == 2 ? BadEventType::kD : BadEventType::kC;
      events.push_back({type, u, v, std::move(diff)});
    }
  }
  std::sort(events.begin(), events.end(), [](const BadEvent& a, const BadEvent& b) {
    return std::tie(a.type, a.u, a.v) < std::tie(b.type, b.u, b.v);
  });
  return events;
}

ConstructorResult lll_construct(const Graph& g, const LllOptions& options) {
  const auto forced = forced_vertices(g);
  if (g.max_degree() < 3) Fail(ErrorCode::kInvalidArgument, "maximum degree must be >= 3");
  if (options.max_restarts < 1) Fail(ErrorCode::kInvalidArgument, "need at least one restart");
  if (options.max_resamples < 0) Fail(ErrorCode::kInvalidArgument, "negative resample budget");
  const auto params = lll_parameters(g.max_degree(), forced.f_ratio(), g.order());
  const VertexSet eligible = Complement(forced.forced);

  ConstructorResult result;
  result.method = "lll";
  result.size_target = params.size_target;
  VertexSet best(g.order());
  for (int restart = 0; restart < options.max_restarts; ++restart) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(restart)));
    VertexSet s(g.order());
    eligible.for_each([&](Vertex v) {
      if (rng.bernoulli(params.p)) s.insert(v);
    });
    std::int64_t resamples = 0;
    while (true) {
      const auto events = occurring_bad_events(g, s);
      if (events.empty()) break;
      const auto& event = events.front();
      if (resamples < options.max_resamples) {
        Resample(event.support, eligible, params.p, rng, s);
        ++resamples;
      } else {
        s.erase(event.support.front());
        ++result.shrink_steps;
      }
    }
    result.resamples_used += resamples;
    result.restarts_used = restart + 1;
    if (restart == 0 || s.size() > best.size()) best = s;
    if (best.size() >= params.size_target) break;
  }
  result.removed = best;
  result.code = Complement(best);
  result.met_size_target = best.size() >= params.size_target;
  result.sampled = best.size();
  VerifyOrThrow(g, result.code, "lll_construct");
  return result;
}

double girth5_probability(int delta, bool* clamped) {
  if (delta < 2) Fail(ErrorCode::kMinDegreeTooSmall, "minimum degree must be >= 2");
  const double x = static_cast<double>(delta);
  double p = (std::log(x) + std::log(std::log(x))) / x;
  const bool clamp = p > 0.999;
  if (clamp) p = 0.999;
  if (clamped != nullptr) *clamped = clamp;
  return p;
}

TwoDominatingSample sample_two_dominating(const Graph& g, double p, Rng& rng) {
  TwoDominatingSample out{VertexSet(g.order()), VertexSet(g.order())};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (rng.bernoulli(p)) out.s.insert(v);
  }
  out.d = out.s;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.closed(v).intersection_size(out.s) < 2) out.d.insert(v);
  }
  return out;
}

std::vector<Edge> isolated_edges(const Graph& g, const VertexSet& d) {
  std::vector<Edge> out;
  d.for_each([&](Vertex u) {
    Vertex only = -1;
    int count = 0;
    for (Vertex w : g.neighbors(u)) {
      if (d.contains(w)) {
        only = w;
        ++count;
      }
    }
    if (count != 1 || only < u) return;
    int other = 0;
    for (Vertex w : g.neighbors(only)) other += d.contains(w) ? 1 : 0;
    if (other == 1) out.emplace_back(u, only);
  });
  return out;
}

int repair_isolated_edges(const Graph& g, VertexSet& d) {
  int added = 0;
  while (true) {
    const auto edges = isolated_edges(g, d);
    if (edges.empty()) return added;
    for (const auto& [u, v] : edges) {
      // An earlier addition in this pass may already have attached the edge.
      bool still_isolated = true;
      for (Vertex a : {u, v}) {
        for (Vertex w : g.neighbors(a)) {
          if (w != u && w != v && d.contains(w)) still_isolated = false;
        }
      }
      if (!still_isolated) continue;
      Vertex pick = -1;
      for (Vertex a : {u, v}) {
        for (Vertex w : g.neighbors(a)) {
          if (w != u && w != v && (pick < 0 || w < pick)) pick = w;
        }
      }
      if (pick < 0) {
        Fail(ErrorCode::kTwinsPresent,
             "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are twins");
      }
      d.insert(pick);
      ++added;
    }
  }
}

namespace {

struct AlterationStage {
  VertexSet code;
  double probability = 0.0;
  bool clamped = false;
  int sampled = 0;
  int two_dom_added = 0;
  int edge_repairs = 0;
  std::int64_t risky_edges = 0;
};

AlterationStage RunAlteration(const Graph& g, int delta, std::uint64_t seed) {
  AlterationStage stage;
  stage.probability = girth5_probability(delta, &stage.clamped);
  Rng rng(seed);
  auto sample = sample_two_dominating(g, stage.probability, rng);
  stage.sampled = sample.s.size();
  stage.two_dom_added = sample.d.size() - stage.sampled;
  for (const auto& [u, v] : g.edges()) {
    if (!(g.closed(u) ^ g.closed(v)).intersects(sample.s)) ++stage.risky_edges;
  }
  stage.code = std::move(sample.d);
  stage.edge_repairs = repair_isolated_edges(g, stage.code);
  return stage;
}

void FillAlteration(const AlterationStage& stage, ConstructorResult& result) {
  result.code = stage.code;
  result.probability = stage.probability;
  result.probability_clamped = stage.clamped;
  result.sampled = stage.sampled;
  result.two_dom_added = stage.two_dom_added;
  result.edge_repairs = stage.edge_repairs;
  result.risky_edges = stage.risky_edges;
  result.restarts_used = 1;
}

Vertex SeparatorFor(const Graph& g, Vertex a, Vertex b) {
  const VertexSet only_a = g.closed(a) - g.closed(b);
  if (!only_a.empty()) return only_a.first();
  return (g.closed(b) - g.closed(a)).first();
}

}  // namespace

ConstructorResult girth5_construct(const Graph& g, std::uint64_t seed, Girth5Mode mode) {
  const auto gir = girth(g);
  if (gir.has_value() && *gir < 5) {
    Fail(ErrorCode::kGirthTooSmall, "girth " + std::to_string(*gir) + " < 5");
  }
  if (g.min_degree() < 3) {
    Fail(ErrorCode::kMinDegreeTooSmall, "minimum degree " + std::to_string(g.min_degree()) + " < 3");
  }
  require_twin_free(g);
  const auto stage = RunAlteration(g, g.min_degree(), seed);
  ConstructorResult result;
  result.method = "girth5";
  result.mode = mode == Girth5Mode::kCase1 ? "case1" : "case2";
  FillAlteration(stage, result);
  if (mode == Girth5Mode::kCase1) {
    result.size_target = 3.0 * std::log(g.min_degree()) / (2.0 * g.min_degree()) * g.order();
  } else {
    const double delta = g.min_degree();
    result.size_target = (std::log(delta) + std::log(std::log(delta))) / delta * g.order();
  }
  result.met_size_target = result.code.size() <= result.size_target;
  result.removed = Complement(result.code);
  VerifyOrThrow(g, result.code, "girth5_construct");
  return result;
}

ConstructorResult rrg_construct(const Graph& g, std::uint64_t seed) {
  require_twin_free(g);
  if (g.max_degree() < 3) Fail(ErrorCode::kInvalidArgument, "maximum degree must be >= 3");
  const auto stage = RunAlteration(g, std::max(g.min_degree(), 3), seed);
  ConstructorResult result;
  result.method = "rrg";
  FillAlteration(stage, result);
  VertexSet& code = result.code;

  auto add = [&](Vertex v, int& counter) {
    if (!code.contains(v)) {
      code.insert(v);
      ++counter;
    }
  };
  // Each rule fires only while its cycle still holds an unseparated pair.
  for (const auto& tri : enumerate_triangles(g)) {
    for (int i = 0; i < 3; ++i) {
      const Vertex a = tri[i];
      const Vertex b = tri[(i + 1) % 3];
      if (!separates(g, code, a, b)) add(SeparatorFor(g, a, b), result.triangle_added);
    }
  }
  for (const auto& cyc : enumerate_four_cycles(g)) {
    int induced = 0;
    bool open = false;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        induced += g.adjacent(cyc[i], cyc[j]) ? 1 : 0;
        open = open || !separates(g, code, cyc[i], cyc[j]);
      }
    }
    if (induced == 6 || !open) continue;  // K4 pairs were handled with the triangles.
    for (Vertex v : cyc) add(v, result.four_cycle_added);
  }
  const VertexSet repaired = greedy_repair(g, code);
  result.safety_net_added = repaired.size() - code.size();
  code = repaired;
  const double d = g.max_degree();
  result.size_target = (std::log(d) + std::log(std::log(d))) / d * g.order();
  result.met_size_target = code.size() <= result.size_target;
  result.removed = Complement(code);
  VerifyOrThrow(g, code, "rrg_construct");
  return result;
}

std::string constructor_result_to_json(const ConstructorResult& result) {
  nlohmann::ordered_json out;
  out["method"] = result.method;
  if (!result.mode.empty()) out["mode"] = result.mode;
  out["n"] = result.code.universe();
  out["code_size"] = result.code.size();
  out["removed_size"] = result.removed.size();
  out["size_target"] = result.size_target;
  out["met_size_target"] = result.met_size_target;
  out["restarts_used"] = result.restarts_used;
  if (result.method == "lll") {
    out["resamples_used"] = result.resamples_used;
    out["shrink_steps"] = result.shrink_steps;
  } else {
    out["probability"] = result.probability;
    out["probability_clamped"] = result.probability_clamped;
    out["sampled"] = result.sampled;
    out["two_dom_added"] = result.two_dom_added;
    out["edge_repairs"] = result.edge_repairs;
    out["risky_edges"] = result.risky_edges;
    if (result.method == "rrg") {
      out["triangle_added"] = result.triangle_added;
      out["four_cycle_added"] = result.four_cycle_added;
      out["safety_net_added"] = result.safety_net_added;
    }
  }
  out["code"] = result.code.members();
  return out.dump();
}

}  // namespace idcode
