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

#include "idcode/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "idcode/config_model.hpp"
#include "idcode/error.hpp"
#include "idcode/identify.hpp"
#include "idcode/random.hpp"
#include "idcode/randomized.hpp"
#include "idcode/solver.hpp"
#include "json.hpp"

namespace idcode {

namespace {

using Clock = std::chrono::steady_clock;

struct Job {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
};

double DominationReference(int n, int d) {
  const double x = d;
  return (std::log(x) - 2.0 * std::log(std::log(x))) / x * n;
}

std::vector<TrialRecord> RunTable1Job(const ExperimentConfig& config, const Job& job) {
  const Graph g = sample_twin_free_regular(job.n, config.d, job.seed);
  const auto gir = girth(g);
  std::vector<TrialRecord> out;
  for (std::size_t i = 0; i < config.methods.size(); ++i) {
    const std::string& method = config.methods[i];
    const std::uint64_t seed = derive_seed(job.seed, 1 + i);
    TrialRecord rec;
    rec.n = job.n;
    rec.trial = job.trial;
    rec.method = method;
    const auto start = Clock::now();
    VertexSet code;
    if (method == "rrg") {
      const auto r = rrg_construct(g, seed);
      code = r.code;
      rec.met_size_target = r.met_size_target;
      rec.reference = r.size_target;
    } else if (method == "girth5") {
      if (gir.has_value() && *gir < 5) {
        rec.skipped = true;
        rec.skip_reason = "girth " + std::to_string(*gir) + " < 5";
        out.push_back(std::move(rec));
        continue;
      }
      const auto r = girth5_construct(g, seed, Girth5Mode::kCase2);
      code = r.code;
      rec.met_size_target = r.met_size_target;
      rec.reference = r.size_target;
    } else if (method == "lll") {
      const auto r = lll_construct(g, LllOptions{.seed = seed});
      code = r.code;
      rec.met_size_target = r.met_size_target;
      rec.reference = g.order() - r.size_target;
    } else if (method == "greedy") {
      code = greedy_code(g);
    } else {
      Fail(ErrorCode::kInvalidArgument, "unknown method '" + method + "'");
    }
    rec.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rec.size = code.size();
    rec.ratio = static_cast<double>(rec.size) / g.order();
    rec.valid = is_valid_code(g, code);
    if (!rec.valid) Fail(ErrorCode::kInternal, method + " returned an invalid code");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<TrialRecord> RunDominationJob(const ExperimentConfig& config, const Job& job) {
  const Graph g = sample_twin_free_regular(job.n, config.d, job.seed);
  TrialRecord rec;
  rec.n = job.n;
  rec.trial = job.trial;
  rec.method = "exact_domination";
  const auto start = Clock::now();
  const auto r = solve_exact_domination(g, config.budget_seconds);
  rec.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  rec.size = r.gamma;
  rec.ratio = static_cast<double>(r.gamma) / g.order();
  rec.valid = is_dominating(g, r.code).ok;
  rec.optimal = r.optimal;
  rec.reference = DominationReference(job.n, config.d);
  rec.met_size_target = r.gamma >= rec.reference;
  return {rec};
}

void Aggregate(ExperimentReport& report) {
  for (int n : report.config.orders) {
    std::vector<std::string> methods;
    for (const auto& rec : report.records) {
      if (rec.n == n && std::find(methods.begin(), methods.end(), rec.method) == methods.end()) {
        methods.push_back(rec.method);
      }
    }
    for (const auto& method : methods) {
      MethodAggregate agg;
      agg.n = n;
      agg.method = method;
      double sum = 0.0;
      for (const auto& rec : report.records) {
        if (rec.n != n || rec.method != method) continue;
        if (rec.skipped) {
          ++agg.skipped;
          continue;
        }
        agg.min_ratio = agg.runs == 0 ? rec.ratio : std::min(agg.min_ratio, rec.ratio);
        agg.max_ratio = agg.runs == 0 ? rec.ratio : std::max(agg.max_ratio, rec.ratio);
        sum += rec.ratio;
        ++agg.runs;
      }
      if (agg.runs > 0) agg.mean_ratio = sum / agg.runs;
      report.aggregates.push_back(std::move(agg));
    }
  }
}

}  // namespace

Graph sample_twin_free_regular(int n, int d, std::uint64_t seed, int max_attempts) {
  for (int a = 0; a < max_attempts; ++a) {
    auto sample = sample_regular(n, d, derive_seed(seed, static_cast<std::uint64_t>(a)));
    if (is_twin_free(sample.graph)) return std::move(sample.graph);
  }
  Fail(ErrorCode::kMaxTriesExhausted, "no twin-free simple sample");
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IDCODE_THREADS"); env != nullptr) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.orders.empty()) Fail(ErrorCode::kInvalidArgument, "no orders given");
  if (config.trials < 1) Fail(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (config.d < 3) Fail(ErrorCode::kInvalidArgument, "d must be >= 3");
  std::vector<Job> jobs;
  for (int n : config.orders) {
    if (static_cast<std::int64_t>(n) * config.d % 2 != 0 || n <= config.d) {
      Fail(ErrorCode::kInvalidArgument, "no " + std::to_string(config.d) + "-regular graph on " +
                                            std::to_string(n) + " vertices");
    }
    for (int t = 0; t < config.trials; ++t) {
      jobs.push_back({n, t, derive_seed(derive_seed(config.seed, static_cast<std::uint64_t>(n)),
                                        static_cast<std::uint64_t>(t))});
    }
  }
  std::vector<std::vector<TrialRecord>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < jobs.size(); i = cursor++) {
      try {
        results[i] = config.kind == ExperimentKind::kTable1 ? RunTable1Job(config, jobs[i])
                                                            : RunDominationJob(config, jobs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(resolve_thread_count(config.threads), static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentReport report;
  report.config = config;
  for (auto& chunk : results) {
    for (auto& rec : chunk) report.records.push_back(std::move(rec));
  }
  Aggregate(report);
  for (int n : config.orders) {
    auto refs = theorem_upper_bounds(TheoremInputs{static_cast<double>(n), config.d, 1.0, config.d});
    report.references.emplace_back(n, std::move(refs));
  }
  return report;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string experiment_to_json(const ExperimentReport& report, const std::string& timestamp) {
  const auto& cfg = report.config;
  nlohmann::ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = cfg.kind == ExperimentKind::kTable1 ? "table1" : "domination";
  out["timestamp"] = timestamp;
  nlohmann::ordered_json config;
  config["seed"] = cfg.seed;
  config["orders"] = cfg.orders;
  config["d"] = cfg.d;
  config["trials"] = cfg.trials;
  if (cfg.kind == ExperimentKind::kTable1) {
    config["methods"] = cfg.methods;
  } else {
    config["budget_seconds"] = cfg.budget_seconds;
  }
  out["config"] = std::move(config);
  auto records = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) {
    nlohmann::ordered_json item;
    item["n"] = rec.n;
    item["trial"] = rec.trial;
    item["method"] = rec.method;
    if (rec.skipped) {
      item["skipped"] = true;
      item["reason"] = rec.skip_reason;
    } else {
      item["size"] = rec.size;
      item["ratio"] = rec.ratio;
      item["valid"] = rec.valid;
      if (cfg.kind == ExperimentKind::kDomination) {
        item["optimal"] = rec.optimal;
        item["reference"] = rec.reference;
        item["at_least_reference"] = rec.met_size_target;
      } else if (rec.method != "greedy") {
        item["reference"] = rec.reference;
        item["met_size_target"] = rec.met_size_target;
      }
      if (cfg.timings) item["millis"] = rec.millis;
    }
    records.push_back(std::move(item));
  }
  out["records"] = std::move(records);
  auto aggregates = nlohmann::ordered_json::array();
  for (const auto& agg : report.aggregates) {
    nlohmann::ordered_json item;
    item["n"] = agg.n;
    item["method"] = agg.method;
    item["runs"] = agg.runs;
    item["skipped"] = agg.skipped;
    item["mean_ratio"] = agg.mean_ratio;
    item["min_ratio"] = agg.min_ratio;
    item["max_ratio"] = agg.max_ratio;
    aggregates.push_back(std::move(item));
  }
  out["aggregates"] = std::move(aggregates);
  auto references = nlohmann::ordered_json::array();
  for (const auto& [n, refs] : report.references) {
    for (const auto& ref : refs) {
      nlohmann::ordered_json item;
      item["n"] = n;
      item["name"] = ref.name;
      item["formula"] = ref.formula;
      item["value"] = ref.value;
      item["ratio"] = ref.value / n;
      item["asymptotic"] = ref.asymptotic;
      references.push_back(std::move(item));
    }
  }
  out["references"] = std::move(references);
  return out.dump(2);
}

std::string experiment_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << std::setprecision(10);
  out << "n,method,runs,skipped,mean_ratio,min_ratio,max_ratio\n";
  for (const auto& agg : report.aggregates) {
    out << agg.n << ',' << agg.method << ',' << agg.runs << ',' << agg.skipped << ','
        << agg.mean_ratio << ',' << agg.min_ratio << ',' << agg.max_ratio << '\n';
  }
  for (const auto& [n, refs] : report.references) {
    for (const auto& ref : refs) {
      out << n << ",ref:" << ref.name << ",,," << ref.value / n << ",,\n";
    }
  }
  return out.str();
}

}  // namespace idcode
