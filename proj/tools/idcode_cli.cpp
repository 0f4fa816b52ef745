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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idcode/idcode.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct DomainError {
  idc_status status;
  std::string message;
};

void Check(idc_status status) {
  if (status != IDC_OK) throw DomainError{status, idc_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { idc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(idc_graph* g) const { idc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<idc_graph, GraphDeleter>;

struct MultiGraphDeleter {
  void operator()(idc_multigraph* h) const { idc_multigraph_free(h); }
};
using MultiGraphPtr = std::unique_ptr<idc_multigraph, MultiGraphDeleter>;

GraphPtr OpenGraph(const std::string& spec) {
  idc_graph* g = nullptr;
  Check(idc_graph_open(spec.c_str(), &g));
  return GraphPtr(g);
}

std::string Take(char* s) { return CString(s).get(); }

std::vector<int> ParseList(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("list", "not an integer: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw CLI::ValidationError("list", "not an integer: '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

void WriteFile(const std::string& path, const std::string& contents) {
  Check(idc_write_file(path.c_str(), contents.c_str()));
}

std::string Pretty(const std::string& json) { return nlohmann::ordered_json::parse(json).dump(2); }

void PrintTheoremTable(const std::string& json) {
  const auto rows = nlohmann::json::parse(json);
  std::cout << std::left << std::setw(34) << "name" << std::setw(16) << "value"
            << "formula\n";
  for (const auto& row : rows) {
    std::ostringstream value;
    value << std::fixed << std::setprecision(4) << row["value"].get<double>();
    std::string name = row["name"].get<std::string>();
    if (row["asymptotic"].get<bool>()) name += " *";
    std::cout << std::setw(34) << name << std::setw(16) << value.str() << row["formula"].get<std::string>()
              << '\n';
  }
  std::cout << "* main term of an asymptotic statement; reference only\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identifying codes in graphs: verification, exact solving and randomized constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(idc_version()));

  // verify
  auto* verify = app.add_subcommand("verify", "Check whether a vertex set is an identifying code");
  std::string verify_graph;
  std::string verify_code;
  verify->add_option("--graph", verify_graph, "Edge-list file or generator spec")->required();
  verify->add_option("--code", verify_code, "Comma-separated vertex list")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Minimum identifying code or dominating set");
  std::string solve_graph;
  double solve_budget = 0.0;
  bool solve_exact = false;
  bool solve_greedy = false;
  bool solve_naive = false;
  bool solve_domination = false;
  solve->add_option("--graph", solve_graph, "Edge-list file or generator spec")->required();
  auto* exact_flag = solve->add_flag("--exact", solve_exact, "Branch and bound (default)");
  auto* greedy_flag = solve->add_flag("--greedy", solve_greedy, "Greedy set cover");
  auto* naive_flag = solve->add_flag("--naive", solve_naive, "Exhaustive subset search");
  auto* dom_flag = solve->add_flag("--domination", solve_domination, "Exact minimum dominating set");
  exact_flag->excludes(greedy_flag)->excludes(naive_flag)->excludes(dom_flag);
  greedy_flag->excludes(naive_flag)->excludes(dom_flag);
  naive_flag->excludes(dom_flag);
  solve->add_option("--budget", solve_budget, "Time budget in seconds (0: none)")->check(CLI::NonNegativeNumber);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Lower bounds for a graph and reference values");
  std::string bounds_graph;
  std::optional<double> bounds_n;
  int bounds_d = 3;
  double bounds_f = 1.0;
  std::optional<int> bounds_delta;
  std::optional<int> bounds_k;
  bool bounds_csv = false;
  bool bounds_json = false;
  bounds->add_option("--graph", bounds_graph, "Edge-list file or generator spec");
  bounds->add_option("--n", bounds_n, "Order for the reference table");
  bounds->add_option("--d", bounds_d, "Maximum degree for the reference table");
  bounds->add_option("--f", bounds_f, "Proportion of non-forced vertices");
  bounds->add_option("--delta", bounds_delta, "Minimum degree (default: d)");
  bounds->add_option("--beta-gamma", bounds_k, "Print beta(k) and gamma(k)");
  bounds->add_flag("--csv", bounds_csv, "CSV output for the reference table");
  bounds->add_flag("--json", bounds_json, "JSON output for the reference table");

  // construct
  auto* construct = app.add_subcommand("construct", "Randomized identifying code constructions");
  std::string construct_graph;
  std::string construct_method = "rrg";
  std::string construct_mode = "case1";
  std::uint64_t construct_seed = 0;
  std::int64_t construct_resamples = 100000;
  int construct_restarts = 100;
  std::string construct_code_out;
  construct->add_option("--graph", construct_graph, "Edge-list file or generator spec")->required();
  construct->add_option("--method", construct_method, "lll, girth5 or rrg")
      ->check(CLI::IsMember({"lll", "girth5", "rrg"}));
  construct->add_option("--seed", construct_seed, "Master seed");
  construct->add_option("--mode", construct_mode, "girth5 case: case1 or case2")
      ->check(CLI::IsMember({"case1", "case2"}));
  construct->add_option("--max-resamples", construct_resamples, "lll resamples per restart")
      ->check(CLI::NonNegativeNumber);
  construct->add_option("--max-restarts", construct_restarts, "lll restarts")->check(CLI::PositiveNumber);
  construct->add_option("--code-out", construct_code_out, "Write the code as a comma list");

  // extremal
  auto* extremal = app.add_subcommand("extremal", "Graphs with known optimal codes");
  extremal->set_help_flag("--help", "Print this help message and exit");
  std::string extremal_family;
  std::string extremal_h;
  int extremal_two_k = 8;
  int extremal_d = 3;
  int extremal_k = 3;
  std::string extremal_out;
  extremal->add_option("--family", extremal_family, "c1, c2, c3 or ak")
      ->required()
      ->check(CLI::IsMember({"c1", "c2", "c3", "ak"}));
  extremal->add_option("--h", extremal_h, "Skeleton multigraph for c1/c2 (file or spec)");
  extremal->add_option("--two-k", extremal_two_k, "Even number of hub vertices for c3");
  extremal->add_option("--d", extremal_d, "Degree for c3");
  extremal->add_option("--k", extremal_k, "Parameter for ak");
  extremal->add_option("--out", extremal_out, "Edge-list output; a .json sidecar is written next to it");

  // rrg
  auto* rrg = app.add_subcommand("rrg", "Configuration-model statistics");
  int rrg_n = 100;
  int rrg_d = 3;
  std::int64_t rrg_trials = 1000;
  std::int64_t rrg_accepted = 0;
  std::uint64_t rrg_seed = 0;
  std::string rrg_out_dir;
  int rrg_samples = 0;
  rrg->add_option("--n", rrg_n, "Order")->check(CLI::PositiveNumber);
  rrg->add_option("--d", rrg_d, "Degree")->check(CLI::PositiveNumber);
  rrg->add_option("--trials", rrg_trials, "Maximum multigraphs drawn")->check(CLI::PositiveNumber);
  rrg->add_option("--accepted", rrg_accepted, "Stop after this many simple samples")
      ->check(CLI::NonNegativeNumber);
  rrg->add_option("--seed", rrg_seed, "Master seed");
  rrg->add_option("--out-dir", rrg_out_dir, "Directory for sampled simple graphs");
  rrg->add_option("--samples", rrg_samples, "Number of graphs written to --out-dir")->check(CLI::NonNegativeNumber);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Seeded experiment reports");
  std::string experiment_kind;
  std::string experiment_orders = "2000";
  int experiment_d = 10;
  int experiment_trials = 5;
  std::uint64_t experiment_seed = 0;
  std::string experiment_methods;
  double experiment_budget = 60.0;
  bool experiment_timings = false;
  int experiment_threads = 0;
  std::string experiment_out;
  std::string experiment_csv;
  experiment->add_option("kind", experiment_kind, "table1 or domination")
      ->required()
      ->check(CLI::IsMember({"table1", "domination"}));
  experiment->add_option("--n", experiment_orders, "Comma-separated orders");
  experiment->add_option("--d", experiment_d, "Degree");
  experiment->add_option("--trials", experiment_trials, "Trials per order")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", experiment_seed, "Master seed");
  experiment->add_option("--methods", experiment_methods, "table1 methods: rrg,lll,girth5,greedy");
  experiment->add_option("--budget", experiment_budget, "domination: seconds per exact solve")
      ->check(CLI::NonNegativeNumber);
  experiment->add_flag("--timings", experiment_timings, "Include wall times in the records");
  experiment->add_option("--threads", experiment_threads, "Worker count (0: IDCODE_THREADS)")
      ->check(CLI::NonNegativeNumber);
  experiment->add_option("--out", experiment_out, "JSON report path (default: stdout)");
  experiment->add_option("--csv", experiment_csv, "CSV aggregate path");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Connected graphs up to isomorphism");
  int corpus_max_n = 7;
  std::string corpus_out;
  corpus->add_option("--max-n", corpus_max_n, "Largest order (at most 8)");
  corpus->add_option("--out", corpus_out, "JSON output path (default: stdout)");

  // info
  auto* info = app.add_subcommand("info", "Girth, short cycles, twins, forced vertices and H(G)");
  std::string info_graph;
  info->add_option("--graph", info_graph, "Edge-list file or generator spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      auto g = OpenGraph(verify_graph);
      const auto code = ParseList(verify_code);
      int valid = 0;
      char* json = nullptr;
      Check(idc_verify(g.get(), code.data(), code.size(), &valid, &json));
      std::cout << Take(json) << '\n';
      return valid != 0 ? kExitOk : kExitDomain;
    }
    if (solve->parsed()) {
      auto g = OpenGraph(solve_graph);
      idc_solve_method method = IDC_SOLVE_EXACT;
      if (solve_greedy) method = IDC_SOLVE_GREEDY;
      if (solve_naive) method = IDC_SOLVE_NAIVE;
      if (solve_domination) method = IDC_SOLVE_DOMINATION;
      char* json = nullptr;
      const idc_status status = idc_solve(g.get(), method, solve_budget, &json);
      if (status == IDC_ERR_BUDGET_EXCEEDED) {
        std::cout << Take(json) << '\n';
        std::cerr << "warning: " << idc_last_error() << '\n';
        return kExitOk;
      }
      Check(status);
      std::cout << Take(json) << '\n';
      return kExitOk;
    }
    if (bounds->parsed()) {
      bool printed = false;
      if (bounds_k) {
        std::uint64_t beta = 0;
        std::uint64_t gamma = 0;
        Check(idc_beta_gamma(*bounds_k, &beta, &gamma));
        std::cout << nlohmann::ordered_json{{"k", *bounds_k}, {"beta", beta}, {"gamma", gamma}}.dump() << '\n';
        printed = true;
      }
      if (!bounds_graph.empty()) {
        auto g = OpenGraph(bounds_graph);
        char* json = nullptr;
        Check(idc_bounds(g.get(), &json));
        std::cout << Take(json) << '\n';
        printed = true;
        if (!bounds_n && idc_graph_max_degree(g.get()) >= 3) {
          bounds_n = idc_graph_order(g.get());
          bounds_d = idc_graph_max_degree(g.get());
        }
      }
      if (bounds_n) {
        char* table = nullptr;
        Check(idc_theorem_table(*bounds_n, bounds_d, bounds_f, bounds_delta.value_or(bounds_d),
                                bounds_csv ? 1 : 0, &table));
        const std::string text = Take(table);
        if (bounds_csv) {
          std::cout << text;
        } else if (bounds_json) {
          std::cout << text << '\n';
        } else {
          PrintTheoremTable(text);
        }
        printed = true;
      }
      if (!printed) {
        std::cerr << "bounds: give --graph, --n or --beta-gamma\n";
        return kExitUsage;
      }
      return kExitOk;
    }
    if (construct->parsed()) {
      auto g = OpenGraph(construct_graph);
      idc_construct_options options;
      idc_construct_options_init(&options);
      options.method = construct_method == "lll"      ? IDC_METHOD_LLL
                       : construct_method == "girth5" ? IDC_METHOD_GIRTH5
                                                      : IDC_METHOD_RRG;
      options.seed = construct_seed;
      options.girth5_case = construct_mode == "case1" ? 1 : 2;
      options.max_resamples = construct_resamples;
      options.max_restarts = construct_restarts;
      char* json = nullptr;
      Check(idc_construct(g.get(), &options, &json));
      const std::string text = Take(json);
      std::cout << text << '\n';
      if (!construct_code_out.empty()) {
        const auto record = nlohmann::json::parse(text);
        std::string list;
        for (const auto& v : record["code"]) list += (list.empty() ? "" : ",") + std::to_string(v.get<int>());
        WriteFile(construct_code_out, list + "\n");
      }
      return kExitOk;
    }
    if (extremal->parsed()) {
      idc_graph* raw = nullptr;
      char* json = nullptr;
      if (extremal_family == "c1" || extremal_family == "c2") {
        if (extremal_h.empty()) {
          std::cerr << "extremal: --h is required for " << extremal_family << '\n';
          return kExitUsage;
        }
        idc_multigraph* h = nullptr;
        Check(idc_multigraph_open(extremal_h.c_str(), &h));
        MultiGraphPtr skeleton(h);
        Check(extremal_family == "c1" ? idc_extremal_c1(skeleton.get(), &raw, &json)
                                      : idc_extremal_c2(skeleton.get(), &raw, &json));
      } else if (extremal_family == "c3") {
        Check(idc_extremal_c3(extremal_two_k, extremal_d, &raw, &json));
      } else {
        Check(idc_extremal_ak(extremal_k, &raw, &json));
      }
      GraphPtr g(raw);
      const std::string summary = Take(json);
      if (extremal_out.empty()) {
        char* text = nullptr;
        Check(idc_graph_to_text(g.get(), &text));
        std::cout << Take(text);
        std::cerr << summary << '\n';
      } else {
        Check(idc_graph_write(g.get(), extremal_out.c_str()));
        WriteFile(extremal_out + ".json", Pretty(summary) + "\n");
        std::cout << summary << '\n';
      }
      return kExitOk;
    }
    if (rrg->parsed()) {
      char* json = nullptr;
      Check(idc_rrg_stats(rrg_n, rrg_d, rrg_seed, rrg_trials, rrg_accepted, &json));
      std::cout << Take(json) << '\n';
      if (!rrg_out_dir.empty() && rrg_samples > 0) {
        std::filesystem::create_directories(rrg_out_dir);
        for (int i = 0; i < rrg_samples; ++i) {
          idc_graph* raw = nullptr;
          Check(idc_rrg_sample(rrg_n, rrg_d, rrg_seed + static_cast<std::uint64_t>(i), 100000, 0, &raw));
          GraphPtr g(raw);
          const auto path = std::filesystem::path(rrg_out_dir) / ("sample_" + std::to_string(i) + ".el");
          Check(idc_graph_write(g.get(), path.string().c_str()));
        }
      }
      return kExitOk;
    }
    if (experiment->parsed()) {
      const auto orders = ParseList(experiment_orders);
      idc_experiment_config config{};
      config.kind = experiment_kind == "table1" ? IDC_EXPERIMENT_TABLE1 : IDC_EXPERIMENT_DOMINATION;
      config.orders = orders.data();
      config.order_count = orders.size();
      config.d = experiment_d;
      config.trials = experiment_trials;
      config.seed = experiment_seed;
      config.methods = experiment_methods.empty() ? nullptr : experiment_methods.c_str();
      config.budget_seconds = experiment_budget;
      config.timings = experiment_timings ? 1 : 0;
      config.threads = experiment_threads;
      char* json = nullptr;
      char* csv = nullptr;
      Check(idc_experiment(&config, &json, experiment_csv.empty() ? nullptr : &csv));
      const std::string report = Take(json);
      if (experiment_out.empty()) {
        std::cout << report << '\n';
      } else {
        WriteFile(experiment_out, report + "\n");
      }
      if (!experiment_csv.empty()) WriteFile(experiment_csv, Take(csv));
      return kExitOk;
    }
    if (corpus->parsed()) {
      char* json = nullptr;
      Check(idc_corpus(corpus_max_n, &json));
      const std::string text = Take(json);
      if (corpus_out.empty()) {
        std::cout << text << '\n';
      } else {
        WriteFile(corpus_out, text + "\n");
      }
      return kExitOk;
    }
    if (info->parsed()) {
      auto g = OpenGraph(info_graph);
      char* summary = nullptr;
      Check(idc_graph_summary(g.get(), &summary));
      auto out = nlohmann::ordered_json::parse(Take(summary));
      if (out["twin_free"].get<bool>()) {
        char* forced = nullptr;
        char* hasse = nullptr;
        Check(idc_forced(g.get(), &forced));
        Check(idc_hasse(g.get(), &hasse));
        out["forced"] = nlohmann::ordered_json::parse(Take(forced));
        out["hasse"] = nlohmann::ordered_json::parse(Take(hasse));
      }
      std::cout << out.dump() << '\n';
      return kExitOk;
    }
  } catch (const DomainError& e) {
    std::cerr << nlohmann::ordered_json{{"error", idc_status_name(e.status)}, {"message", e.message}}.dump()
              << '\n';
    return kExitDomain;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::ordered_json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
