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

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "idcode/extremal.hpp"
#include "idcode/generators.hpp"
#include "idcode/identify.hpp"
#include "idcode/random.hpp"
#include "json.hpp"
#include "oracles.hpp"

using idcode::ErrorCode;
using idcode::Graph;
using idcode::VertexSet;

namespace {

std::vector<Graph> TwinFreeSamples() {
  std::vector<Graph> out = fixtures::TwinFreeCorpus(6);
  idcode::Rng rng(77);
  while (out.size() < 260) {
    const Graph g = oracle::RandomGraph(11, 0.3, rng);
    if (g.min_degree() > 0 && idcode::is_twin_free(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_SUITE("identify") {
  TEST_CASE("domination examples") {
    CHECK(idcode::is_dominating(fixtures::P3(), VertexSet(3, {1})).ok);
    const auto check = idcode::is_dominating(fixtures::P3(), VertexSet(3, {0}));
    CHECK_FALSE(check.ok);
    CHECK(check.witnesses == std::vector<int>{2});
    const Graph petersen = idcode::petersen_graph();
    CHECK(idcode::is_dominating(petersen, VertexSet::Full(10)).ok);
  }

  TEST_CASE("two-domination examples") {
    const Graph c5 = idcode::cycle_graph(5);
    CHECK(idcode::is_two_dominating(c5, VertexSet(5, {0, 1, 2, 3})).ok);
    const auto check = idcode::is_two_dominating(c5, VertexSet(5, {0, 2}));
    CHECK_FALSE(check.ok);
    CHECK(check.witnesses.front() == 3);
    CHECK(idcode::is_two_dominating(c5, VertexSet::Full(5)).ok);
  }

  TEST_CASE("separation examples") {
    const Graph k33 = fixtures::K33();
    CHECK(idcode::is_separating(k33, VertexSet(6, {0, 1, 3, 4})).ok);
    const VertexSet bad(6, {0, 3, 4});
    const auto check = idcode::is_separating(k33, bad);
    CHECK_FALSE(check.ok);
    const auto adj = oracle::Adjacency(k33);
    const auto bits = oracle::ToBits(bad);
    REQUIRE_FALSE(check.witnesses.empty());
    for (const auto& [u, v] : check.witnesses) CHECK(oracle::Trace(adj, u, bits) == oracle::Trace(adj, v, bits));
    CHECK_FALSE(oracle::Separating(adj, bits));
    CHECK_FALSE(idcode::is_separating(fixtures::K2(), VertexSet::Full(2)).ok);
  }

  TEST_CASE("identifying code examples") {
    CHECK(idcode::is_identifying_code(fixtures::K33(), VertexSet(6, {0, 1, 3, 4})).valid);
    CHECK(idcode::is_identifying_code(fixtures::P3(), VertexSet(3, {0, 2})).valid);
    const auto adj = oracle::Adjacency(fixtures::P3());
    int valid_pairs = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const VertexSet c(3, {a, b});
        const bool got = idcode::is_identifying_code(fixtures::P3(), c).valid;
        CHECK(got == oracle::IsCode(adj, oracle::ToBits(c)));
        valid_pairs += got ? 1 : 0;
      }
    }
    CHECK(valid_pairs == 1);
    for (const auto& c : {VertexSet(2), VertexSet(2, {0}), VertexSet::Full(2)}) {
      const auto cert = idcode::is_identifying_code(fixtures::K2(), c);
      CHECK_FALSE(cert.valid);
      bool has_twins = false;
      for (const auto& v : cert.violations) has_twins = has_twins || v.kind == idcode::ViolationKind::kTwins;
      CHECK(has_twins);
    }
  }

  TEST_CASE("certificate agrees with the all-pairs oracle") {
    idcode::Rng rng(12);
    for (const auto& g : fixtures::ConnectedCorpus(6)) {
      const auto adj = oracle::Adjacency(g);
      for (int round = 0; round < 6; ++round) {
        const VertexSet c = oracle::RandomSubset(g.order(), 0.5, rng);
        const auto bits = oracle::ToBits(c);
        const auto cert = idcode::is_identifying_code(g, c);
        CHECK(cert.valid == oracle::IsCode(adj, bits));
        CHECK(cert.valid == cert.violations.empty());
        CHECK(idcode::is_valid_code(g, c) == cert.valid);
        CHECK(idcode::is_separating(g, c).ok == oracle::Separating(adj, bits));
        CHECK(idcode::is_dominating(g, c).ok == oracle::Dominating(adj, bits));
        CHECK(idcode::is_two_dominating(g, c).ok == oracle::TwoDominating(adj, bits));
        for (const auto& v : cert.violations) {
          if (v.kind == idcode::ViolationKind::kUndominated) {
            CHECK(oracle::Empty(oracle::Trace(adj, v.witnesses.at(0), bits)));
          } else {
            CHECK(oracle::Trace(adj, v.witnesses.at(0), bits) == oracle::Trace(adj, v.witnesses.at(1), bits));
          }
        }
      }
    }
  }

  TEST_CASE("witness cap keeps the verdict exact") {
    const Graph g = idcode::cycle_graph(30);
    const auto cert = idcode::is_identifying_code(g, VertexSet(30), idcode::CheckOptions{.max_witnesses = 3});
    CHECK_FALSE(cert.valid);
    CHECK(cert.violations.size() <= 3);
    const auto none = idcode::is_identifying_code(g, VertexSet(30), idcode::CheckOptions{.max_witnesses = 0});
    CHECK_FALSE(none.valid);
    CHECK_FALSE(none.violations.empty());
  }

  TEST_CASE("supersets of valid codes stay valid") {
    idcode::Rng rng(31);
    for (const auto& g : TwinFreeSamples()) {
      VertexSet c = idcode::greedy_repair(g, oracle::RandomSubset(g.order(), 0.3, rng));
      REQUIRE(idcode::is_valid_code(g, c));
      for (int step = 0; step < 4; ++step) {
        c |= oracle::RandomSubset(g.order(), 0.2, rng);
        CHECK(idcode::is_identifying_code(g, c).valid);
      }
    }
  }

  TEST_CASE("every vertex has a closed neighbour whose removal keeps V a code") {
    for (const auto& g : TwinFreeSamples()) {
      for (int u = 0; u < g.order(); ++u) {
        bool found = false;
        g.closed(u).for_each([&](int v) {
          VertexSet c = VertexSet::Full(g.order());
          c.erase(v);
          found = found || idcode::is_valid_code(g, c);
        });
        CHECK(found);
      }
    }
  }

  TEST_CASE("forced vertices examples") {
    const auto ak = idcode::construct_ak_universal(3);
    const auto report = idcode::forced_vertices(ak.graph);
    CHECK(report.forced.size() == 6);
    CHECK_FALSE(report.forced.contains(6));
    CHECK(report.non_forced * 7 == report.order);
    const auto c2 = idcode::construct_c2(idcode::MultiGraph::FromGraph(idcode::complete_graph(5)));
    CHECK(idcode::forced_vertices(c2.graph).forced.empty());
    CHECK(idcode::forced_vertices(c2.graph).f_ratio() == 1.0);
    const auto c1 = idcode::construct_c1(idcode::MultiGraph::FromGraph(idcode::hypercube_graph(3)));
    CHECK(idcode::forced_vertices(c1.graph).forced.size() == 24);
    CHECK_ERROR_CODE(idcode::forced_vertices(fixtures::K2()), ErrorCode::kTwinsPresent);
  }

  TEST_CASE("forced vertices agree with the all-pairs oracle") {
    for (const auto& g : TwinFreeSamples()) {
      const auto report = idcode::forced_vertices(g);
      const auto members = report.forced.members();
      CHECK(std::set<int>(members.begin(), members.end()) == oracle::Forced(g));
      CHECK(report.witnesses.size() == members.size());
      for (const auto& w : report.witnesses) {
        CHECK(g.adjacent(w.u, w.v));
        CHECK(idcode::nbhd_symmetric_difference(g, w.u, w.v) == VertexSet(g.order(), {w.forced}));
      }
      CHECK(report.f_ratio() > 0.0);
      CHECK(report.f_ratio() <= 1.0);
      CHECK(report.f_ratio() * (g.max_degree() + 1) >= 1.0 - 1e-12);
    }
  }

  TEST_CASE("Hasse digraph examples") {
    const auto p3 = idcode::hasse_digraph(fixtures::P3());
    std::set<oracle::Arc> arcs;
    for (const auto& a : p3.arcs()) arcs.insert({a.from, a.to, a.label});
    CHECK(arcs == std::set<oracle::Arc>{{0, 1, 2}, {2, 1, 0}});
    CHECK(idcode::hasse_digraph(fixtures::K33()).arcs().empty());
    CHECK(idcode::forced_closure(p3, 1).members() == std::vector<int>{0, 1, 2});
    CHECK(idcode::forced_closure(idcode::hasse_digraph(fixtures::K33()), 4).members() == std::vector<int>{4});

    const auto c1 = idcode::construct_c1(idcode::MultiGraph::FromGraph(idcode::hypercube_graph(3)));
    const auto h = idcode::hasse_digraph(c1.graph);
    CHECK(h.arcs().size() == 24);
    for (const auto& a : h.arcs()) {
      const auto& clique = c1.cliques[static_cast<std::size_t>(a.from / 4)];
      CHECK(a.from == clique.front());
      CHECK(a.label == c1.partner[a.to]);
    }
    for (const auto& clique : c1.cliques) {
      CHECK(idcode::forced_closure(h, clique.front()).members() == clique);
    }
  }

  TEST_CASE("Hasse digraph structure") {
    for (const auto& g : TwinFreeSamples()) {
      const auto h = idcode::hasse_digraph(g);
      std::set<oracle::Arc> got;
      std::set<int> labels;
      for (const auto& a : h.arcs()) {
        got.insert({a.from, a.to, a.label});
        labels.insert(a.label);
        CHECK(a.label != a.from);
        CHECK(a.label != a.to);
        CHECK(idcode::nbhd_symmetric_difference(g, a.from, a.to) == VertexSet(g.order(), {a.label}));
      }
      CHECK(got == oracle::HasseArcs(g));
      CHECK(h.is_acyclic());
      const auto forced = idcode::forced_vertices(g).forced.members();
      CHECK(labels == std::set<int>(forced.begin(), forced.end()));
      for (int s : labels) CHECK(h.in_degree(s) <= 1);
      if (idcode::count_short_cycles(g).x3 == 0) {
        for (int v = 0; v < g.order(); ++v) {
          CHECK(h.out_degree(v) <= 1);
          CHECK(h.in_degree(v) <= 3);
          CHECK(idcode::forced_closure(h, v).size() <= 4);
        }
      }
    }
  }

  TEST_CASE("Hasse digraph cycle detection") {
    const idcode::HasseDigraph cyclic(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK_FALSE(cyclic.is_acyclic());
    CHECK_ERROR_CODE(idcode::HasseDigraph(2, {{0, 5, 1}}), ErrorCode::kOutOfRange);
    CHECK_ERROR_CODE(idcode::hasse_digraph(fixtures::K2()), ErrorCode::kTwinsPresent);
  }

  TEST_CASE("greedy repair") {
    const auto repaired = idcode::greedy_repair(fixtures::P3(), VertexSet(3));
    CHECK(idcode::is_valid_code(fixtures::P3(), repaired));
    CHECK(repaired.size() <= 3);
    const VertexSet valid(6, {0, 1, 3, 4});
    CHECK(idcode::greedy_repair(fixtures::K33(), valid) == valid);
    CHECK_ERROR_CODE(idcode::greedy_repair(fixtures::K2(), VertexSet(2)), ErrorCode::kTwinsPresent);
    idcode::Rng rng(8);
    for (const auto& g : TwinFreeSamples()) {
      const VertexSet start = oracle::RandomSubset(g.order(), 0.25, rng);
      const VertexSet out = idcode::greedy_repair(g, start);
      CHECK(start.is_subset_of(out));
      CHECK(idcode::is_valid_code(g, out));
    }
  }

  TEST_CASE("certificate JSON shape") {
    const auto cert = idcode::is_identifying_code(fixtures::P3(), VertexSet(3, {0}));
    const auto json = nlohmann::json::parse(idcode::certificate_to_json(cert));
    CHECK(json["valid"] == false);
    CHECK(json["code"] == nlohmann::json::array({0}));
    CHECK(json["violations"].size() == cert.violations.size());
    CHECK(json["violations"][0]["kind"] == "undominated");
  }
}
