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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "idcode/bounds.hpp"
#include "idcode/config_model.hpp"
#include "idcode/corpus.hpp"
#include "idcode/experiment.hpp"
#include "idcode/extremal.hpp"
#include "idcode/generators.hpp"
#include "idcode/identify.hpp"
#include "idcode/random.hpp"
#include "idcode/randomized.hpp"
#include "idcode/solver.hpp"

using idcode::Graph;
using idcode::VertexSet;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure and keeps later checks running.
class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void note(const std::string& text) {
    if (outcome_.pass) outcome_.detail = text;
  }
  Outcome result() const { return outcome_; }

 private:
  Outcome outcome_;
};

double Seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

std::vector<Graph> TwinFreeCorpus(int max_n) {
  std::vector<Graph> out;
  for (auto& e : idcode::corpus_enumerate(max_n)) {
    if (e.twin_free && e.graph.edge_count() > 0) out.push_back(e.graph);
  }
  return out;
}

VertexSet FromMask(int n, std::uint32_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1U) s.insert(v);
  }
  return s;
}

// Domination plus separation of every pair, with no distance restriction.
bool AllPairsCode(const Graph& g, const VertexSet& c) {
  for (int u = 0; u < g.order(); ++u) {
    if (!g.closed(u).intersects(c)) return false;
    for (int v = u + 1; v < g.order(); ++v) {
      if (!(g.closed(u) ^ g.closed(v)).intersects(c)) return false;
    }
  }
  return true;
}

Outcome ExtremalValues() {
  Checker check;
  auto start = Clock::now();
  const auto k33 = idcode::solve_exact(idcode::complete_bipartite_graph(3, 3), 60.0);
  check.expect(k33.optimal && k33.gamma == 4 && Seconds(start) < 60, "K33 gamma " + std::to_string(k33.gamma));

  start = Clock::now();
  const auto c2 = idcode::construct_c2(idcode::MultiGraph::FromGraph(idcode::complete_graph(5)));
  const auto c2_exact = idcode::solve_exact(c2.graph, 60.0);
  check.expect(c2_exact.optimal && c2_exact.gamma == 15 && Seconds(start) < 60,
               "C2(K5) gamma " + std::to_string(c2_exact.gamma));

  const auto c1 = idcode::construct_c1(idcode::MultiGraph::FromGraph(idcode::hypercube_graph(3)));
  const auto forced = idcode::forced_vertices(c1.graph).forced;
  check.expect(forced.size() == 24, "C1(Q3) forced " + std::to_string(forced.size()));
  check.expect(idcode::is_valid_code(c1.graph, forced), "C1(Q3) forced set is not a code");
  check.expect(c1.claimed_gamma == forced.size(), "C1(Q3) claimed gamma differs from |F|");

  start = Clock::now();
  const auto c3 = idcode::construct_c3(8, 3);
  check.expect(c3.optimal_code.size() == 12 && idcode::is_valid_code(c3.graph, c3.optimal_code),
               "C3(8,3) constructed code");
  const auto c3_exact = idcode::solve_exact(c3.graph, 600.0);
  check.expect(c3_exact.optimal && c3_exact.gamma == 12, "C3(8,3) gamma " + std::to_string(c3_exact.gamma));
  check.note(Fmt("K33=4, C2(K5)=15, |F(C1(Q3))|=24, C3(8,3)=12 (%.2fs for C3)", Seconds(start)));
  return check.result();
}

Outcome OracleEquivalence() {
  Checker check;
  const auto start = Clock::now();
  const auto graphs = TwinFreeCorpus(7);
  for (const auto& g : graphs) {
    const int n = g.order();
    const auto exact = idcode::solve_exact(g, 0.0);
    const auto naive = idcode::solve_naive(g);
    const int log_lower = static_cast<int>(std::ceil(std::log2(n + 1.0)));
    const int degree_lower = (2 * n + g.max_degree() + 1) / (g.max_degree() + 2);
    check.expect(exact.optimal && exact.gamma == naive.gamma, "exact differs from naive");
    check.expect(idcode::is_valid_code(g, exact.code), "exact code invalid");
    check.expect(log_lower <= exact.gamma && exact.gamma <= n - 1, "log/trivial bound violated");
    check.expect(exact.gamma >= degree_lower, "degree bound violated");
  }
  check.note(Fmt("%.0f graphs, %.2fs", static_cast<double>(graphs.size()), Seconds(start)));
  return check.result();
}

Outcome StructuralProperties() {
  Checker check;
  const auto start = Clock::now();
  const auto graphs = TwinFreeCorpus(7);
  for (const auto& g : graphs) {
    const int n = g.order();
    const int d = g.max_degree();
    const VertexSet all = VertexSet::Full(n);
    for (int u = 0; u < n; ++u) {
      bool found = false;
      g.closed(u).for_each([&](int v) {
        VertexSet rest = all;
        rest.erase(v);
        found = found || idcode::is_valid_code(g, rest);
      });
      check.expect(found, "take-out lemma fails");
    }
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      const VertexSet c = FromMask(n, mask);
      const bool valid = idcode::is_identifying_code(g, c).valid;
      check.expect(valid == AllPairsCode(g, c), "distance-two check differs from all pairs");
      if (!valid) continue;
      for (int x = 0; x < n; ++x) {
        VertexSet bigger = c;
        bigger.insert(x);
        check.expect(idcode::is_valid_code(g, bigger), "superset of a code is invalid");
      }
    }
    const auto forced = idcode::forced_vertices(g);
    check.expect(forced.f_ratio() * (d + 1) >= 1.0 - 1e-12, "f(G) below 1/(d+1)");

    const auto h = idcode::hasse_digraph(g);
    check.expect(h.is_acyclic(), "H(G) has a cycle");
    forced.forced.for_each([&](int v) { check.expect(h.in_degree(v) <= 1, "forced vertex with two in-arcs"); });
    if (idcode::count_short_cycles(g).x3 == 0) {
      for (int v = 0; v < n; ++v) {
        check.expect(h.out_degree(v) <= 1, "triangle-free out-degree above 1");
        check.expect(h.in_degree(v) <= 3, "triangle-free in-degree above 3");
        check.expect(idcode::forced_closure(h, v).size() <= 4, "triangle-free |F(u)| above 4");
      }
    }
  }
  for (const auto& entry : idcode::corpus_enumerate(7)) {
    const Graph& g = entry.graph;
    if (g.order() < 2) continue;
    const auto pairs = static_cast<long>(idcode::find_false_twins(g).size());
    check.expect(2 * pairs <= static_cast<long>(g.order()) * (g.max_degree() - 1), "false-twin bound violated");
  }
  for (int side : {3, 4}) {
    const Graph k = idcode::complete_bipartite_graph(side, side);
    const auto pairs = static_cast<long>(idcode::find_false_twins(k).size());
    check.expect(2 * pairs == 2L * side * (side - 1), "false-twin bound not tight on K_{d,d}");
  }
  check.note(Fmt("%.0f twin-free graphs, %.2fs", static_cast<double>(graphs.size()), Seconds(start)));
  return check.result();
}

Outcome TightnessWitness() {
  Checker check;
  const auto start = Clock::now();
  const auto a3 = idcode::construct_ak_universal(3);
  const auto forced = idcode::forced_vertices(a3.graph);
  check.expect(forced.order == 7 && forced.non_forced == 1, "f(G) is not 1/7");
  check.expect(a3.graph.max_degree() == 6, "maximum degree is not 6");
  const auto exact = idcode::solve_exact(a3.graph, 10.0);
  check.expect(exact.optimal && exact.gamma == 6 && Seconds(start) < 10, "gamma is not n-1");
  check.note(Fmt("f=1/7, gamma=6, %.3fs", Seconds(start)));
  return check.result();
}

Outcome ConfigurationModel() {
  Checker check;
  const auto start = Clock::now();
  const auto stats = idcode::cycle_statistics(100, 3, 2026, {.max_trials = 1000000, .target_accepted = 2000});
  const double seconds = Seconds(start);
  check.expect(stats.accepted_simple == 2000, "fewer than 2000 accepted samples");
  check.expect(stats.mean_x3 >= 1.20 && stats.mean_x3 <= 1.47, Fmt("mean X3 %.4f", stats.mean_x3));
  check.expect(stats.mean_x4 >= 1.80 && stats.mean_x4 <= 2.20, Fmt("mean X4 %.4f", stats.mean_x4));
  check.expect(stats.acceptance_rate >= 0.105 && stats.acceptance_rate <= 0.170,
               Fmt("acceptance %.4f", stats.acceptance_rate));
  check.expect(seconds < 60, Fmt("took %.1fs", seconds));
  check.note(Fmt("X3=%.4f X4=%.4f acceptance=%.4f", stats.mean_x3, stats.mean_x4, stats.acceptance_rate) +
             Fmt(" (%.2fs)", seconds));
  return check.result();
}

Outcome ConstructorValidity() {
  Checker check;
  const auto start = Clock::now();
  const Graph petersen = idcode::petersen_graph();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = idcode::girth5_construct(petersen, seed, idcode::Girth5Mode::kCase1);
    check.expect(idcode::is_valid_code(petersen, r.code), "girth5 on Petersen invalid");
  }
  int girth_runs = 0;
  for (std::uint64_t seed = 0; girth_runs < 100; ++seed) {
    const Graph g = idcode::sample_regular(50, 3, idcode::derive_seed(7, seed)).graph;
    const auto girth = idcode::girth(g);
    if (girth.has_value() && *girth < 5) continue;
    const auto r = idcode::girth5_construct(g, seed, idcode::Girth5Mode::kCase1);
    check.expect(idcode::is_valid_code(g, r.code), "girth5 on a sample invalid");
    ++girth_runs;
  }
  double worst_ratio_10 = 0.0;
  double mean_ratio[2] = {0.0, 0.0};
  const int degrees[2] = {5, 10};
  for (int i = 0; i < 2; ++i) {
    const int d = degrees[i];
    for (std::uint64_t run = 0; run < 100; ++run) {
      const Graph g = idcode::sample_twin_free_regular(2000, d, idcode::derive_seed(static_cast<std::uint64_t>(d), run));
      const auto r = idcode::rrg_construct(g, run);
      check.expect(idcode::is_valid_code(g, r.code), "rrg code invalid for d=" + std::to_string(d));
      const double ratio = static_cast<double>(r.code.size()) / g.order();
      mean_ratio[i] += ratio / 100.0;
      if (d == 10) worst_ratio_10 = std::max(worst_ratio_10, ratio);
    }
  }
  check.expect(worst_ratio_10 <= 0.5, Fmt("d=10 size/n reached %.4f", worst_ratio_10));
  const double seconds = Seconds(start);
  check.expect(seconds < 600, Fmt("took %.1fs", seconds));
  check.note(Fmt("rrg mean size/n d=5 %.4f, d=10 %.4f, max d=10 %.4f", mean_ratio[0], mean_ratio[1], worst_ratio_10) +
             Fmt(" (%.1fs)", seconds));
  return check.result();
}

Outcome LocalLemmaConstructor() {
  Checker check;
  const auto start = Clock::now();
  const Graph g = idcode::sample_twin_free_regular(1030, 3, 42);
  const auto r = idcode::lll_construct(g, {.seed = 1, .max_restarts = 100});
  const double seconds = Seconds(start);
  check.expect(idcode::is_valid_code(g, r.code), "code invalid");
  check.expect(r.removed.size() >= 4, "|S| = " + std::to_string(r.removed.size()));
  check.expect(r.code.size() <= 1026, "code larger than 1026");
  check.expect(seconds < 300, Fmt("took %.1fs", seconds));
  check.note("|S|=" + std::to_string(r.removed.size()) + " code=" + std::to_string(r.code.size()) +
             " restarts=" + std::to_string(r.restarts_used) + Fmt(" (%.2fs)", seconds));
  return check.result();
}

Outcome DominationProbe() {
  Checker check;
  std::string detail = "report only:";
  const double d = 3.0;
  for (int n : {30, 50}) {
    const Graph g = idcode::sample_twin_free_regular(n, 3, static_cast<std::uint64_t>(n));
    const auto r = idcode::solve_exact_domination(g, 120.0);
    check.expect(idcode::is_dominating(g, r.code).ok, "dominating set invalid");
    const double reference = (std::log(d) - 2.0 * std::log(std::log(d))) / d * n;
    detail += Fmt(" n=%.0f gamma=%.0f reference=%.2f", n, r.gamma, reference);
    if (!r.optimal) detail += " (budget hit)";
  }
  check.note(detail);
  return check.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 extremal exact values", ExtremalValues},
      {"2 oracle equivalence on the corpus", OracleEquivalence},
      {"3 structural properties on the corpus", StructuralProperties},
      {"4 tightness witness", TightnessWitness},
      {"5 configuration model statistics", ConfigurationModel},
      {"6 constructor validity", ConstructorValidity},
      {"7 local lemma constructor", LocalLemmaConstructor},
      {"8 domination probe", DominationProbe},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
