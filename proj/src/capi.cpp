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

#include "idcode/idcode.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "idcode/bounds.hpp"
#include "idcode/config_model.hpp"
#include "idcode/corpus.hpp"
#include "idcode/error.hpp"
#include "idcode/experiment.hpp"
#include "idcode/extremal.hpp"
#include "idcode/generators.hpp"
#include "idcode/identify.hpp"
#include "idcode/randomized.hpp"
#include "idcode/solver.hpp"
#include "json.hpp"

struct idc_graph {
  idcode::Graph graph;
};

struct idc_multigraph {
  idcode::MultiGraph graph;
};

namespace {

using idcode::ErrorCode;

thread_local std::string g_last_error;

idc_status Record(idc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
idc_status Guard(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    return fn();
  } catch (const idcode::Error& e) {
    return Record(static_cast<idc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Record(IDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(IDC_ERR_INTERNAL, e.what());
  } catch (...) {
    return Record(IDC_ERR_INTERNAL, "unknown exception");
  }
}

void RequireOut(const void* p, const char* what) {
  if (p == nullptr) idcode::Fail(ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

const idcode::Graph& Deref(const idc_graph* g) {
  RequireOut(g, "graph");
  return g->graph;
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Emit(char** out, const std::string& s) {
  if (out != nullptr) *out = Dup(s);
}

idc_graph* Wrap(idcode::Graph g) { return new idc_graph{std::move(g)}; }

idcode::VertexSet CodeFromArray(const idcode::Graph& g, const int* code, size_t len) {
  if (len > 0) RequireOut(code, "code");
  idcode::VertexSet set(g.order());
  for (size_t i = 0; i < len; ++i) {
    if (code[i] < 0 || code[i] >= g.order()) {
      idcode::Fail(ErrorCode::kOutOfRange, "code vertex " + std::to_string(code[i]) + " out of range");
    }
    set.insert(code[i]);
  }
  return set;
}

idc_status Extremal(const idcode::ExtremalInstance& inst, idc_graph** out, char** json) {
  RequireOut(out, "out");
  std::string summary = idcode::extremal_to_json(inst);
  *out = Wrap(inst.graph);
  Emit(json, summary);
  return IDC_OK;
}

}  // namespace

extern "C" {

const char* idc_status_name(idc_status status) {
  if (status == IDC_OK) return "Ok";
  static thread_local std::string name;
  name = std::string(idcode::ErrorCodeName(static_cast<ErrorCode>(status)));
  return name.c_str();
}

const char* idc_last_error(void) { return g_last_error.c_str(); }

const char* idc_version(void) { return "1.0.0"; }

void idc_string_free(char* s) { std::free(s); }

idc_status idc_graph_load(const char* path, idc_graph** out) {
  return Guard([&] {
    RequireOut(path, "path");
    RequireOut(out, "out");
    *out = Wrap(idcode::load_graph(path));
    return IDC_OK;
  });
}

idc_status idc_graph_parse(const char* text, idc_graph** out) {
  return Guard([&] {
    RequireOut(text, "text");
    RequireOut(out, "out");
    std::istringstream in(text);
    *out = Wrap(idcode::read_graph(in));
    return IDC_OK;
  });
}

idc_status idc_graph_generate(const char* spec, idc_graph** out) {
  return Guard([&] {
    RequireOut(spec, "spec");
    RequireOut(out, "out");
    *out = Wrap(idcode::generate_graph(spec));
    return IDC_OK;
  });
}

idc_status idc_graph_open(const char* spec_or_path, idc_graph** out) {
  return Guard([&] {
    RequireOut(spec_or_path, "spec");
    RequireOut(out, "out");
    *out = Wrap(idcode::is_generator_spec(spec_or_path) ? idcode::generate_graph(spec_or_path)
                                                        : idcode::load_graph(spec_or_path));
    return IDC_OK;
  });
}

idc_status idc_graph_from_edges(int n, const int* edges, size_t m, idc_graph** out) {
  return Guard([&] {
    RequireOut(out, "out");
    if (m > 0) RequireOut(edges, "edges");
    std::vector<idcode::Edge> list;
    list.reserve(m);
    for (size_t i = 0; i < m; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = Wrap(idcode::Graph(n, list));
    return IDC_OK;
  });
}

void idc_graph_free(idc_graph* g) { delete g; }

int idc_graph_order(const idc_graph* g) { return g == nullptr ? -1 : g->graph.order(); }

int idc_graph_edge_count(const idc_graph* g) { return g == nullptr ? -1 : g->graph.edge_count(); }

int idc_graph_max_degree(const idc_graph* g) { return g == nullptr ? -1 : g->graph.max_degree(); }

idc_status idc_graph_to_text(const idc_graph* g, char** out) {
  return Guard([&] {
    RequireOut(out, "out");
    *out = Dup(idcode::graph_to_text(Deref(g)));
    return IDC_OK;
  });
}

idc_status idc_graph_write(const idc_graph* g, const char* path) {
  return Guard([&] {
    RequireOut(path, "path");
    idcode::write_file_atomically(path, idcode::graph_to_text(Deref(g)));
    return IDC_OK;
  });
}

idc_status idc_graph_summary(const idc_graph* g, char** json) {
  return Guard([&] {
    RequireOut(json, "json");
    const auto& graph = Deref(g);
    nlohmann::ordered_json out;
    out["n"] = graph.order();
    out["m"] = graph.edge_count();
    out["min_degree"] = graph.min_degree();
    out["max_degree"] = graph.max_degree();
    const auto gir = idcode::girth(graph);
    out["girth"] = gir.has_value() ? nlohmann::ordered_json(*gir) : nlohmann::ordered_json(nullptr);
    const auto cycles = idcode::count_short_cycles(graph);
    out["x3"] = cycles.x3;
    out["x4"] = cycles.x4;
    out["twins"] = idcode::find_twins(graph);
    out["false_twins"] = idcode::find_false_twins(graph);
    out["twin_free"] = idcode::is_twin_free(graph);
    *json = Dup(out.dump());
    return IDC_OK;
  });
}

idc_status idc_multigraph_open(const char* spec_or_path, idc_multigraph** out) {
  return Guard([&] {
    RequireOut(spec_or_path, "spec");
    RequireOut(out, "out");
    auto h = idcode::is_generator_spec(spec_or_path) ? idcode::generate_multigraph(spec_or_path)
                                                     : idcode::load_multigraph(spec_or_path);
    *out = new idc_multigraph{std::move(h)};
    return IDC_OK;
  });
}

void idc_multigraph_free(idc_multigraph* h) { delete h; }

int idc_multigraph_order(const idc_multigraph* h) { return h == nullptr ? -1 : h->graph.order(); }

idc_status idc_write_file(const char* path, const char* contents) {
  return Guard([&] {
    RequireOut(path, "path");
    RequireOut(contents, "contents");
    idcode::write_file_atomically(path, contents);
    return IDC_OK;
  });
}

idc_status idc_verify(const idc_graph* g, const int* code, size_t len, int* valid, char** json) {
  return Guard([&] {
    const auto& graph = Deref(g);
    const auto cert = idcode::is_identifying_code(graph, CodeFromArray(graph, code, len));
    if (valid != nullptr) *valid = cert.valid ? 1 : 0;
    Emit(json, idcode::certificate_to_json(cert));
    return IDC_OK;
  });
}

idc_status idc_solve(const idc_graph* g, idc_solve_method method, double budget_seconds, char** json) {
  return Guard([&] {
    const auto& graph = Deref(g);
    idcode::SolveResult result;
    switch (method) {
      case IDC_SOLVE_EXACT: result = idcode::solve_exact(graph, budget_seconds); break;
      case IDC_SOLVE_NAIVE: result = idcode::solve_naive(graph); break;
      case IDC_SOLVE_DOMINATION: result = idcode::solve_exact_domination(graph, budget_seconds); break;
      case IDC_SOLVE_GREEDY:
        result.code = idcode::greedy_code(graph);
        result.gamma = result.code.size();
        result.optimal = false;
        break;
      default: idcode::Fail(ErrorCode::kInvalidArgument, "unknown solve method");
    }
    Emit(json, idcode::solve_result_to_json(result));
    if (!result.optimal && method != IDC_SOLVE_GREEDY) {
      return Record(IDC_ERR_BUDGET_EXCEEDED, "time budget exhausted before optimality was proven");
    }
    return IDC_OK;
  });
}

idc_status idc_bounds(const idc_graph* g, char** json) {
  return Guard([&] {
    RequireOut(json, "json");
    *json = Dup(idcode::bound_report_to_json(idcode::lower_bounds(Deref(g))));
    return IDC_OK;
  });
}

idc_status idc_theorem_table(double n, int d, double f_ratio, int delta, int csv, char** out) {
  return Guard([&] {
    RequireOut(out, "out");
    const auto values = idcode::theorem_upper_bounds(idcode::TheoremInputs{n, d, f_ratio, delta});
    *out = Dup(csv != 0 ? idcode::reference_values_to_csv(values) : idcode::reference_values_to_json(values));
    return IDC_OK;
  });
}

idc_status idc_beta_gamma(int k, uint64_t* beta, uint64_t* gamma) {
  return Guard([&] {
    const auto bg = idcode::beta_gamma(k);
    if (beta != nullptr) *beta = bg.beta;
    if (gamma != nullptr) *gamma = bg.gamma;
    return IDC_OK;
  });
}

idc_status idc_forced(const idc_graph* g, char** json) {
  return Guard([&] {
    RequireOut(json, "json");
    const auto report = idcode::forced_vertices(Deref(g));
    nlohmann::ordered_json out;
    out["forced"] = report.forced.members();
    out["forced_count"] = report.forced.size();
    out["non_forced"] = report.non_forced;
    out["n"] = report.order;
    out["f_ratio"] = report.f_ratio();
    auto witnesses = nlohmann::ordered_json::array();
    for (const auto& w : report.witnesses) witnesses.push_back({w.u, w.v, w.forced});
    out["witnesses"] = std::move(witnesses);
    *json = Dup(out.dump());
    return IDC_OK;
  });
}

idc_status idc_hasse(const idc_graph* g, char** json) {
  return Guard([&] {
    RequireOut(json, "json");
    const auto h = idcode::hasse_digraph(Deref(g));
    nlohmann::ordered_json out;
    auto arcs = nlohmann::ordered_json::array();
    for (const auto& a : h.arcs()) arcs.push_back({a.from, a.to, a.label});
    out["arcs"] = std::move(arcs);
    out["acyclic"] = h.is_acyclic();
    *json = Dup(out.dump());
    return IDC_OK;
  });
}

void idc_construct_options_init(idc_construct_options* options) {
  if (options == nullptr) return;
  const idcode::LllOptions defaults;
  options->method = IDC_METHOD_RRG;
  options->seed = 0;
  options->girth5_case = 1;
  options->max_resamples = defaults.max_resamples;
  options->max_restarts = defaults.max_restarts;
}

idc_status idc_construct(const idc_graph* g, const idc_construct_options* options, char** json) {
  return Guard([&] {
    RequireOut(options, "options");
    RequireOut(json, "json");
    const auto& graph = Deref(g);
    idcode::ConstructorResult result;
    switch (options->method) {
      case IDC_METHOD_LLL:
        result = idcode::lll_construct(graph, idcode::LllOptions{options->seed, options->max_resamples,
                                                                 options->max_restarts});
        break;
      case IDC_METHOD_GIRTH5: {
        if (options->girth5_case != 1 && options->girth5_case != 2) {
          idcode::Fail(ErrorCode::kInvalidArgument, "girth5 case must be 1 or 2");
        }
        const auto mode = options->girth5_case == 1 ? idcode::Girth5Mode::kCase1 : idcode::Girth5Mode::kCase2;
        result = idcode::girth5_construct(graph, options->seed, mode);
        break;
      }
      case IDC_METHOD_RRG: result = idcode::rrg_construct(graph, options->seed); break;
      default: idcode::Fail(ErrorCode::kInvalidArgument, "unknown construction method");
    }
    *json = Dup(idcode::constructor_result_to_json(result));
    return IDC_OK;
  });
}

idc_status idc_extremal_c1(const idc_multigraph* h, idc_graph** out, char** json) {
  return Guard([&] {
    RequireOut(h, "skeleton");
    return Extremal(idcode::construct_c1(h->graph), out, json);
  });
}

idc_status idc_extremal_c2(const idc_multigraph* h, idc_graph** out, char** json) {
  return Guard([&] {
    RequireOut(h, "skeleton");
    return Extremal(idcode::construct_c2(h->graph), out, json);
  });
}

idc_status idc_extremal_c3(int two_k, int d, idc_graph** out, char** json) {
  return Guard([&] { return Extremal(idcode::construct_c3(two_k, d), out, json); });
}

idc_status idc_extremal_ak(int k, idc_graph** out, char** json) {
  return Guard([&] { return Extremal(idcode::construct_ak_universal(k), out, json); });
}

idc_status idc_rrg_stats(int n, int d, uint64_t seed, int64_t max_trials, int64_t target_accepted, char** json) {
  return Guard([&] {
    RequireOut(json, "json");
    const auto stats = idcode::cycle_statistics(n, d, seed, idcode::StatsBudget{max_trials, target_accepted});
    *json = Dup(idcode::sample_stats_to_json(stats));
    return IDC_OK;
  });
}

idc_status idc_rrg_sample(int n, int d, uint64_t seed, int max_tries, int require_twin_free, idc_graph** out) {
  return Guard([&] {
    RequireOut(out, "out");
    *out = Wrap(require_twin_free != 0 ? idcode::sample_twin_free_regular(n, d, seed)
                                       : idcode::sample_simple(n, d, seed, max_tries).graph);
    return IDC_OK;
  });
}

idc_status idc_experiment(const idc_experiment_config* config, char** json, char** csv) {
  return Guard([&] {
    RequireOut(config, "config");
    idcode::ExperimentConfig cfg;
    cfg.kind = config->kind == IDC_EXPERIMENT_DOMINATION ? idcode::ExperimentKind::kDomination
                                                         : idcode::ExperimentKind::kTable1;
    if (config->order_count > 0) {
      RequireOut(config->orders, "orders");
      cfg.orders.assign(config->orders, config->orders + config->order_count);
    }
    cfg.d = config->d;
    cfg.trials = config->trials;
    cfg.seed = config->seed;
    if (config->methods != nullptr) {
      cfg.methods.clear();
      std::stringstream in(config->methods);
      for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) cfg.methods.push_back(item);
      }
    }
    cfg.budget_seconds = config->budget_seconds;
    cfg.timings = config->timings != 0;
    cfg.threads = config->threads;
    const auto report = idcode::run_experiment(cfg);
    if (json != nullptr) *json = Dup(idcode::experiment_to_json(report, idcode::utc_timestamp()));
    if (csv != nullptr) *csv = Dup(idcode::experiment_to_csv(report));
    return IDC_OK;
  });
}

idc_status idc_corpus(int max_n, char** json) {
  return Guard([&] {
    RequireOut(json, "json");
    auto list = nlohmann::ordered_json::array();
    for (const auto& entry : idcode::corpus_enumerate(max_n)) {
      nlohmann::ordered_json item;
      item["n"] = entry.graph.order();
      item["m"] = entry.graph.edge_count();
      item["twin_free"] = entry.twin_free;
      item["edges"] = entry.graph.edges();
      list.push_back(std::move(item));
    }
    *json = Dup(list.dump());
    return IDC_OK;
  });
}

}  // extern "C"
