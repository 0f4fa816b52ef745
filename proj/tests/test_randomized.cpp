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

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "doctest.h"
#include "fixtures.hpp"
#include "idcode/config_model.hpp"
#include "idcode/generators.hpp"
#include "idcode/identify.hpp"
#include "idcode/randomized.hpp"
#include "json.hpp"
#include "oracles.hpp"

using idcode::BadEventType;
using idcode::ErrorCode;
using idcode::Graph;
using idcode::VertexSet;

namespace {

using EventKey = std::tuple<int, int, int>;

std::set<EventKey> BruteEvents(const Graph& g, const VertexSet& s) {
  const auto adj = oracle::Adjacency(g);
  const auto dist = oracle::Distances(adj);
  const auto in_s = oracle::ToBits(s);
  auto inside = [&](const oracle::Bits& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] && !in_s[i]) return false;
    }
    return true;
  };
  std::set<EventKey> out;
  for (int u = 0; u < g.order(); ++u) {
    if (inside(oracle::Closed(adj, u))) out.emplace(0, u, -1);
    for (int v = u + 1; v < g.order(); ++v) {
      const auto diff = oracle::SymmetricDifference(adj, u, v);
      if (oracle::Empty(diff) || !inside(diff)) continue;
      if (dist[u][v] == 1) out.emplace(1, u, v);
      if (dist[u][v] == 2) out.emplace(oracle::Count(diff) == 2 ? 3 : 2, u, v);
    }
  }
  return out;
}

// K4 with a pendant vertex on each corner.
Graph K4Corona() {
  std::vector<idcode::Edge> edges;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    edges.emplace_back(i, 4 + i);
  }
  return Graph(8, edges);
}

std::vector<Graph> TwinFreeRandom(int count, int n, double p, std::uint64_t seed) {
  idcode::Rng rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    Graph g = oracle::RandomGraph(n, p, rng);
    if (g.min_degree() > 0 && g.max_degree() >= 3 && idcode::is_twin_free(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_SUITE("randomized") {
  TEST_CASE("local lemma parameters") {
    const auto p = idcode::lll_parameters(3, 1.0, 309);
    CHECK(p.k == doctest::Approx(34.31).epsilon(1e-3));
    CHECK(p.k == doctest::Approx(99.0 * std::numbers::ln2 / 2.0));
    CHECK(p.p == doctest::Approx(0.009714).epsilon(1e-3));
    CHECK(p.size_target == doctest::Approx(1.0));
    CHECK(p.max_events_a == 4);
    CHECK(p.max_events_b == 6);
    CHECK(p.max_events_c == 18);
    CHECK(p.max_events_d == 2);
    CHECK(p.dependency_sum <= 0.5);
    CHECK(p.p <= 0.25);
    CHECK(idcode::lll_parameters(3, 0.5, 100).k == doctest::Approx(68.62).epsilon(1e-3));
    CHECK_ERROR_CODE(idcode::lll_parameters(3, 0.0, 100), ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(idcode::lll_parameters(2, 1.0, 100), ErrorCode::kInvalidArgument);
    for (int d = 3; d <= 40; ++d) {
      for (double f : {1.0, 0.5, 0.1}) {
        const auto q = idcode::lll_parameters(d, f, 1000);
        CHECK(q.size_target <= 1000);
        CHECK(q.k >= 30);
      }
    }
    CHECK(idcode::bad_event_weight(BadEventType::kA, 4) == 4);
    CHECK(idcode::bad_event_weight(BadEventType::kC, 5) == 5);
    CHECK(idcode::bad_event_weight(BadEventType::kD, 9) == 2);
  }

  TEST_CASE("bad events match brute force and characterise valid complements") {
    idcode::Rng rng(2);
    auto graphs = TwinFreeRandom(80, 10, 0.35, 17);
    for (const auto& g : fixtures::TwinFreeCorpus(6)) graphs.push_back(g);
    for (const auto& g : graphs) {
      const auto forced = idcode::forced_vertices(g).forced;
      for (int round = 0; round < 5; ++round) {
        const VertexSet s = oracle::RandomSubset(g.order(), 0.2 + 0.15 * round, rng) - forced;
        const auto events = idcode::occurring_bad_events(g, s);
        std::set<EventKey> got;
        for (const auto& e : events) {
          got.emplace(static_cast<int>(e.type), e.u, e.v);
          for (int x : e.support) CHECK(s.contains(x));
        }
        CHECK(got == BruteEvents(g, s));
        CHECK(std::is_sorted(events.begin(), events.end(), [](const auto& a, const auto& b) {
          return std::tie(a.type, a.u, a.v) < std::tie(b.type, b.u, b.v);
        }));
        CHECK(events.empty() == idcode::is_valid_code(g, VertexSet::Full(g.order()) - s));
      }
    }
  }

  TEST_CASE("local lemma constructor") {
    const auto k33 = idcode::lll_construct(fixtures::K33(), {.seed = 1});
    CHECK(idcode::is_valid_code(fixtures::K33(), k33.code));
    CHECK_ERROR_CODE(idcode::lll_construct(fixtures::K2(), {}), ErrorCode::kTwinsPresent);
    for (const auto& g : TwinFreeRandom(30, 40, 0.12, 23)) {
      const auto forced = idcode::forced_vertices(g).forced;
      for (std::int64_t resamples : {std::int64_t{0}, std::int64_t{1000}}) {
        const idcode::LllOptions options{.seed = 5, .max_resamples = resamples, .max_restarts = 4};
        const auto r = idcode::lll_construct(g, options);
        CHECK(idcode::is_valid_code(g, r.code));
        CHECK_FALSE(r.removed.intersects(forced));
        CHECK((r.code | r.removed) == VertexSet::Full(g.order()));
        CHECK_FALSE(r.code.intersects(r.removed));
        CHECK(r.restarts_used <= 4);
        const auto again = idcode::lll_construct(g, options);
        CHECK(again.code == r.code);
        CHECK(again.resamples_used == r.resamples_used);
        if (resamples == 0) CHECK(r.resamples_used == 0);
      }
    }
  }

  TEST_CASE("local lemma constructor meets the size target at moderate order") {
    const Graph g = idcode::sample_simple(618, 3, 99, 100000).graph;
    if (idcode::is_twin_free(g)) {
      const auto r = idcode::lll_construct(g, {.seed = 3});
      CHECK(idcode::is_valid_code(g, r.code));
      CHECK(r.met_size_target);
      CHECK(r.removed.size() >= 2);
    }
  }

  TEST_CASE("two-dominating sample and isolated edge repair") {
    idcode::Rng rng(44);
    for (const auto& g : TwinFreeRandom(40, 20, 0.2, 8)) {
      for (double p : {0.1, 0.3, 0.6}) {
        auto sample = idcode::sample_two_dominating(g, p, rng);
        CHECK(sample.s.is_subset_of(sample.d));
        CHECK(idcode::is_two_dominating(g, sample.d).ok);
        VertexSet d = sample.d;
        const int added = idcode::repair_isolated_edges(g, d);
        CHECK(d.size() == sample.d.size() + added);
        CHECK(idcode::isolated_edges(g, d).empty());
        CHECK(idcode::is_two_dominating(g, d).ok);
      }
    }
    const Graph p4 = idcode::path_graph(4);
    const auto edges = idcode::isolated_edges(p4, VertexSet(4, {1, 2}));
    CHECK(edges == std::vector<idcode::Edge>{{1, 2}});
    VertexSet d(4, {1, 2});
    CHECK(idcode::repair_isolated_edges(p4, d) == 1);
    CHECK(d == VertexSet(4, {0, 1, 2}));
  }

  TEST_CASE("alteration probability") {
    bool clamped = true;
    const double p3 = idcode::girth5_probability(3, &clamped);
    CHECK(p3 == doctest::Approx((std::log(3.0) + std::log(std::log(3.0))) / 3.0));
    CHECK_FALSE(clamped);
    for (int delta = 2; delta < 200; ++delta) {
      const double p = idcode::girth5_probability(delta);
      CHECK(p > 0.0);
      CHECK(p < 1.0);
    }
  }

  TEST_CASE("girth-5 constructor") {
    const Graph petersen = idcode::petersen_graph();
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto r = idcode::girth5_construct(petersen, seed, idcode::Girth5Mode::kCase1);
      CHECK(idcode::is_valid_code(petersen, r.code));
      CHECK(idcode::is_two_dominating(petersen, r.code).ok);
      CHECK(idcode::isolated_edges(petersen, r.code).empty());
      const auto case2 = idcode::girth5_construct(petersen, seed, idcode::Girth5Mode::kCase2);
      CHECK(case2.code == r.code);
      CHECK(case2.mode == "case2");
    }
    CHECK_ERROR_CODE(idcode::girth5_construct(fixtures::K33(), 0, idcode::Girth5Mode::kCase1),
                     ErrorCode::kGirthTooSmall);
    CHECK_ERROR_CODE(idcode::girth5_construct(idcode::cycle_graph(7), 0, idcode::Girth5Mode::kCase1),
                     ErrorCode::kMinDegreeTooSmall);
  }

  TEST_CASE("random regular constructor") {
    CHECK_ERROR_CODE(idcode::rrg_construct(idcode::complete_graph(4), 0), ErrorCode::kTwinsPresent);
    const Graph corona = K4Corona();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto r = idcode::rrg_construct(corona, seed);
      CHECK(idcode::is_valid_code(corona, r.code));
      CHECK(r.code.size() >= *oracle::MinimumCode(corona));
    }
    const Graph petersen = idcode::petersen_graph();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto a = idcode::girth5_construct(petersen, seed, idcode::Girth5Mode::kCase1);
      const auto b = idcode::rrg_construct(petersen, seed);
      CHECK(b.triangle_added == 0);
      CHECK(b.four_cycle_added == 0);
      CHECK(b.safety_net_added == 0);
      CHECK(a.code == b.code);
    }
    for (const auto& g : TwinFreeRandom(40, 30, 0.2, 61)) {
      const auto r = idcode::rrg_construct(g, 7);
      CHECK(idcode::is_valid_code(g, r.code));
      CHECK(idcode::rrg_construct(g, 7).code == r.code);
    }
  }

  TEST_CASE("constructor JSON shape") {
    const auto r = idcode::rrg_construct(idcode::petersen_graph(), 1);
    const auto json = nlohmann::json::parse(idcode::constructor_result_to_json(r));
    CHECK(json["method"] == "rrg");
    CHECK(json["code_size"] == r.code.size());
    CHECK(json.contains("safety_net_added"));
    const auto l = nlohmann::json::parse(idcode::constructor_result_to_json(idcode::lll_construct(fixtures::K33(), {})));
    CHECK(l.contains("resamples_used"));
  }
}
