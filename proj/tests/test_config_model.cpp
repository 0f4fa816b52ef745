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

#include "doctest.h"
#include "fixtures.hpp"
#include "idcode/config_model.hpp"
#include "idcode/identify.hpp"
#include "json.hpp"
#include "oracles.hpp"

using idcode::ErrorCode;
using idcode::SimpleSampler;

TEST_SUITE("config_model") {
  TEST_CASE("multigraph pairing") {
    for (int d : {1, 2, 3, 4, 7}) {
      for (int n : {8, 10, 30}) {
        if ((n * d) % 2 != 0) continue;
        const auto h = idcode::sample_multigraph(n, d, 11);
        CHECK(h.order() == n);
        CHECK(static_cast<int>(h.edges().size()) == n * d / 2);
        CHECK(h.regular_degree() == d);
        CHECK(idcode::sample_multigraph(n, d, 11).edges() == h.edges());
      }
    }
    CHECK_ERROR_CODE(idcode::sample_multigraph(5, 3, 0), ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(idcode::sample_multigraph(0, 3, 0), ErrorCode::kInvalidArgument);
    CHECK_ERROR_CODE(idcode::sample_multigraph(4, 4, 0), ErrorCode::kInvalidArgument);
  }

  TEST_CASE("simple samplers return simple regular graphs") {
    for (auto sampler : {SimpleSampler::kRejection, SimpleSampler::kPairing, SimpleSampler::kAuto}) {
      for (int d : {2, 3, 4}) {
        const auto s = idcode::sample_regular(10, d, 5, sampler);
        CHECK(s.graph.order() == 10);
        CHECK(s.graph.edge_count() == 5 * d);
        CHECK(s.graph.is_regular());
        CHECK(s.graph.max_degree() == d);
        CHECK(s.tries >= 1);
        CHECK(idcode::sample_regular(10, d, 5, sampler).graph.edges() == s.graph.edges());
      }
    }
    const auto big = idcode::sample_regular(500, 10, 3);
    CHECK(big.graph.is_regular());
    CHECK(big.graph.max_degree() == 10);
    CHECK(big.graph.edge_count() == 2500);
    CHECK(idcode::sample_simple_pairing(50, 12, 1, 100).graph.min_degree() == 12);
  }

  TEST_CASE("rejection budget exhaustion") {
    CHECK_ERROR_CODE(idcode::sample_simple(200, 12, 0, 1), ErrorCode::kMaxTriesExhausted);
    CHECK_ERROR_CODE(idcode::sample_simple(10, 3, 0, 0), ErrorCode::kInvalidArgument);
  }

  TEST_CASE("cycle statistics references") {
    const auto s = idcode::cycle_statistics(60, 4, 9, {.max_trials = 50});
    CHECK(s.expected_x3 == doctest::Approx(4.5));
    CHECK(s.expected_x4 == doctest::Approx(10.125));
    CHECK(s.expected_acceptance == doctest::Approx(std::exp(-15.0 / 4.0)));
    CHECK(s.trials == 50);
    CHECK(s.acceptance_rate == doctest::Approx(static_cast<double>(s.accepted_simple) / 50.0));
    const auto t = idcode::cycle_statistics(100, 3, 1, {.max_trials = 100000, .target_accepted = 40});
    CHECK(t.accepted_simple == 40);
    CHECK(t.twin_reference == doctest::Approx(0.135));
    CHECK(t.twin_fraction >= 0.0);
    CHECK(t.twin_fraction <= 1.0);
    const auto again = idcode::cycle_statistics(100, 3, 1, {.max_trials = 100000, .target_accepted = 40});
    CHECK(again.mean_x3 == t.mean_x3);
    CHECK(again.trials == t.trials);
    const auto json = nlohmann::json::parse(idcode::sample_stats_to_json(t));
    CHECK(json["accepted_simple"] == 40);
  }

  TEST_CASE("short cycle counts agree with the oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = idcode::sample_regular(16, 3, seed).graph;
      const auto [tri, quad] = oracle::ShortCycles(g);
      CHECK(static_cast<std::int64_t>(idcode::enumerate_triangles(g).size()) == tri);
      CHECK(static_cast<std::int64_t>(idcode::enumerate_four_cycles(g).size()) == quad);
    }
  }
}
