// Copyright 2026 The ISSP Toolkit Authors
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

// Benchmark harness: solves generated instances cell by cell and reports
// average and worst relative error and solve time. Families A and B are
// scored against their exact optimum, C and D against the target itself,
// which overstates the true error.

#ifndef ISSP_BENCH_HPP_
#define ISSP_BENCH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "issp/analysis.hpp"
#include "issp/exact.hpp"
#include "issp/instgen.hpp"
#include "issp/solver.hpp"

namespace issp {

struct BenchCell {
  Family family = Family::kA;
  std::size_t n = 0;
  std::optional<Rational> param;  // ratio for C, ratio cap for D
  Rational epsilon{1, 10};
};

struct BenchRecord {
  BenchCell cell;
  Rational avg_error;
  double avg_time = 0;
  std::size_t trials = 0;
  Rational worst_error;
  double worst_time = 0;
};

struct BenchOptions {
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes;
};

inline constexpr const char* kBenchCsvHeader =
    "family,n,param,epsilon,avg_rel_err_pct,avg_time_s,trials,"
    "worst_rel_err_pct,worst_time_s";

namespace detail {

inline std::string percent_field(const Rational& fraction) {
  std::string s = fraction.to_percent_string(3);
  s.pop_back();  // drop '%'
  return s;
}

inline std::string seconds_field(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

}  // namespace detail

inline std::string to_csv_row(const BenchRecord& r) {
  return std::string(family_name(r.cell.family)) + "," +
         std::to_string(r.cell.n) + "," +
         (r.cell.param ? r.cell.param->to_decimal_string() : "") + "," +
         r.cell.epsilon.to_decimal_string() + "," +
         detail::percent_field(r.avg_error) + "," +
         detail::seconds_field(r.avg_time) + "," + std::to_string(r.trials) +
         "," + detail::percent_field(r.worst_error) + "," +
         detail::seconds_field(r.worst_time);
}

/// Exact optimum of a subset-sum family instance: brute force up to 20
/// intervals, meet-in-the-middle up to 40, the DP beyond that. nullopt when
/// the DP would exceed the memory budget.
inline std::optional<Int> exact_reference(const Instance& inst,
                                          std::size_t memory_budget_bytes) {
  PreprocessOutcome pre = preprocess(inst);
  if (auto* hit = std::get_if<ImmediateSolution>(&pre)) {
    return hit->solution.total;
  }
  const Instance& reduced = std::get<ReducedInstance>(pre).instance;
  if (reduced.empty()) return Int{0};
  if (reduced.size() <= 20) return brute_force_optimum(reduced).value;
  if (reduced.size() <= 40) return meet_in_the_middle_optimum(reduced).value;
  try {
    DpOptions opts;
    opts.memory_budget_bytes = memory_budget_bytes;
    return dp_exact(reduced, opts).value;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMemoryBudgetExceeded) return std::nullopt;
    throw;
  }
}

inline GenSpec cell_spec(const BenchCell& cell, std::uint64_t seed,
                         std::size_t trial) {
  GenSpec spec;
  spec.family = cell.family;
  spec.n = cell.n;
  if (cell.param) spec.ratio = *cell.param;
  const std::uint64_t param_word =
      cell.param ? static_cast<std::uint64_t>(cell.param->num()) * 1000003u +
                       static_cast<std::uint64_t>(cell.param->den())
                 : 0;
  spec.seed = derive_seed({seed, static_cast<std::uint64_t>(cell.family),
                           cell.n, param_word, trial});
  return spec;
}

struct TrialResult {
  Rational error;
  double seconds = 0;
};

/// One trial of one cell. Throws Error(kMemoryBudgetExceeded) when no exact
/// reference can be computed for a subset-sum family.
inline TrialResult run_trial(const BenchCell& cell, const BenchOptions& opts,
                             std::size_t trial) {
  const Instance inst = generate(cell_spec(cell, opts.seed, trial));
  Int reference = inst.target;
  if (cell.family == Family::kA || cell.family == Family::kB) {
    auto exact = exact_reference(inst, opts.memory_budget_bytes);
    if (!exact) {
      throw Error(ErrorCode::kMemoryBudgetExceeded,
                  std::string("family ") + family_name(cell.family) + " n=" +
                      std::to_string(cell.n) +
                      ": exact reference exceeds the memory budget");
    }
    reference = *exact;
  }
  SolveRequest req;
  req.algorithm = Algorithm::kFptas;
  req.epsilon = cell.epsilon;
  const SolveReport rep = solve(inst, req);
  TrialResult out;
  out.seconds = rep.elapsed_seconds;
  out.error = reference == 0 ? Rational(0) : relative_error(rep.value, reference);
  return out;
}

/// Runs every trial of a cell. Trials may run on several threads; results
/// are stored by trial index, so the record does not depend on scheduling.
inline BenchRecord run_cell(const BenchCell& cell, const BenchOptions& opts) {
  const std::size_t trials = std::max<std::size_t>(1, opts.trials);
  std::vector<std::optional<TrialResult>> results(trials);
  std::vector<std::optional<Error>> failures(trials);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t t = first; t < trials; t += step) {
      try {
        results[t] = run_trial(cell, opts, t);
      } catch (const Error& e) {
        failures[t] = e;
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(opts.threads, 1, trials);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& th : pool) th.join();
  }
  for (auto& f : failures) {
    if (f) throw *f;
  }
  BenchRecord rec;
  rec.cell = cell;
  rec.trials = trials;
  Rational sum(0);
  double time_sum = 0;
  for (const auto& r : results) {
    sum = sum + r->error;
    time_sum += r->seconds;
    rec.worst_error = std::max(rec.worst_error, r->error);
    rec.worst_time = std::max(rec.worst_time, r->seconds);
  }
  rec.avg_error = sum / Rational(static_cast<Int>(trials));
  rec.avg_time = time_sum / static_cast<double>(trials);
  return rec;
}

struct PolynomialRate {
  std::size_t samples = 0;
  std::size_t solved = 0;  // by the all-intervals or ratio route
  double rate() const {
    return samples == 0 ? 0.0 : static_cast<double>(solved) / samples;
  }
};

/// Redraws the target uniformly from (max hi, sum hi] `samples` times and
/// counts how often the all-intervals or ratio route answers exactly.
inline PolynomialRate polynomial_rate(std::span<const Interval> intervals,
                                      std::size_t samples,
                                      std::uint64_t seed) {
  PolynomialRate out;
  Instance base = validate(intervals, 1);
  const Int lo_t = base.max_hi() + 1;
  const Int hi_t = base.sum_hi();
  if (lo_t > hi_t) return out;
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    base.target = lo_t + static_cast<Int>(rng.uniform(
                             0, static_cast<std::uint64_t>(hi_t - lo_t)));
    ++out.samples;
    auto poly = solve_polynomial(base);
    if (poly && (poly->route == PolynomialRoute::kAllIntervals ||
                 poly->route == PolynomialRoute::kRatioAtLeastTwo)) {
      ++out.solved;
    }
  }
  return out;
}

}  // namespace issp

#endif  // ISSP_BENCH_HPP_
