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

#include "idcode/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "idcode/error.hpp"
#include "idcode/identify.hpp"
#include "json.hpp"

namespace idcode {

namespace {

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) Fail(ErrorCode::kOutOfRange, "beta/gamma overflow");
  return out;
}

std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) Fail(ErrorCode::kOutOfRange, "beta/gamma overflow");
  return out;
}

}  // namespace

BoundReport lower_bounds(const Graph& g) {
  if (g.edge_count() == 0) Fail(ErrorCode::kInvalidArgument, "lower bounds need an edge");
  const auto forced = forced_vertices(g);
  const int n = g.order();
  const int d = g.max_degree();
  BoundReport report;
  while ((std::int64_t{1} << report.log_lower) < n + 1) ++report.log_lower;
  report.degree_lower = (2 * n + d + 1) / (d + 2);
  report.forced_lower = forced.forced.size();
  report.best_lower = std::max({report.log_lower, report.degree_lower, report.forced_lower});
  report.trivial_upper = n - 1;
  return report;
}

BetaGamma beta_gamma(int k) {
  if (k < 3) Fail(ErrorCode::kInvalidArgument, "beta/gamma need k >= 3");
  const auto base = static_cast<std::uint64_t>(2 * k - 3);
  std::uint64_t term = 1;
  std::uint64_t beta = 0;
  for (int i = 0; i <= k - 2; ++i) {
    beta = CheckedAdd(beta, term);
    if (i < k - 2) term = CheckedMul(term, base);
  }
  const std::uint64_t kb = CheckedMul(static_cast<std::uint64_t>(k), beta);
  // C(kb, 2) with the even factor halved first.
  const std::uint64_t pairs = kb % 2 == 0 ? CheckedMul(kb / 2, kb - 1) : CheckedMul(kb, (kb - 1) / 2);
  return {beta, CheckedAdd(kb, pairs)};
}

std::vector<ReferenceValue> theorem_upper_bounds(const TheoremInputs& in) {
  if (in.n <= 0) Fail(ErrorCode::kInvalidArgument, "n must be positive");
  if (in.d < 3) Fail(ErrorCode::kInvalidArgument, "maximum degree must be >= 3");
  if (in.delta < 3) Fail(ErrorCode::kInvalidArgument, "minimum degree must be >= 3");
  if (in.delta > in.d) Fail(ErrorCode::kInvalidArgument, "minimum degree exceeds maximum degree");
  if (!(in.f_ratio > 0.0 && in.f_ratio <= 1.0)) Fail(ErrorCode::kInvalidArgument, "f must lie in (0, 1]");
  const double n = in.n;
  const double d = in.d;
  const double delta = in.delta;
  const double f = in.f_ratio;
  std::vector<ReferenceValue> out;
  out.push_back({"lll_upper", "n - n f^2 / (103 d)", n - n * f * f / (103.0 * d), false});
  out.push_back({"general_upper", "n - n / (103 d (d+1)^2)", n - n / (103.0 * d * (d + 1) * (d + 1)), false});
  out.push_back({"girth5_upper", "3 ln(delta) / (2 delta) n", 3.0 * std::log(delta) / (2.0 * delta) * n, true});
  out.push_back({"girth5_sparse_upper", "(ln delta + ln ln delta) / delta n",
                 (std::log(delta) + std::log(std::log(delta))) / delta * n, true});
  out.push_back({"random_regular_upper", "(ln d + ln ln d) / d n",
                 (std::log(d) + std::log(std::log(d))) / d * n, true});
  out.push_back({"random_regular_domination_lower", "(ln d - 2 ln ln d) / d n",
                 (std::log(d) - 2.0 * std::log(std::log(d))) / d * n, true});
  return out;
}

std::string bound_report_to_json(const BoundReport& report) {
  nlohmann::ordered_json out;
  out["log_lower"] = report.log_lower;
  out["degree_lower"] = report.degree_lower;
  out["forced_lower"] = report.forced_lower;
  out["best_lower"] = report.best_lower;
  out["trivial_upper"] = report.trivial_upper;
  return out.dump();
}

std::string reference_values_to_json(const std::vector<ReferenceValue>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) {
    nlohmann::ordered_json row;
    row["name"] = v.name;
    row["formula"] = v.formula;
    row["value"] = v.value;
    row["asymptotic"] = v.asymptotic;
    out.push_back(std::move(row));
  }
  return out.dump();
}

std::string reference_values_to_csv(const std::vector<ReferenceValue>& values) {
  std::ostringstream out;
  out.precision(10);
  out << "name,formula,value,asymptotic\n";
  for (const auto& v : values) {
    out << v.name << ",\"" << v.formula << "\"," << v.value << ',' << (v.asymptotic ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace idcode
