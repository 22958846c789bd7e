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

// End-to-end solve: validate, reduce, dispatch to a solver, map the result
// back to input positions and re-check it against the original instance.

#ifndef ISSP_SOLVER_HPP_
#define ISSP_SOLVER_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "issp/analysis.hpp"
#include "issp/core.hpp"
#include "issp/exact.hpp"
#include "issp/fptas.hpp"

namespace issp {

enum class Algorithm { kFptas, kDp, kBrute, kAuto };

inline const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kFptas: return "fptas";
    case Algorithm::kDp: return "dp";
    case Algorithm::kBrute: return "brute";
    case Algorithm::kAuto: return "auto";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s == "fptas") return Algorithm::kFptas;
  if (s == "dp") return Algorithm::kDp;
  if (s == "brute") return Algorithm::kBrute;
  if (s == "auto") return Algorithm::kAuto;
  return std::nullopt;
}

struct SolveRequest {
  Algorithm algorithm = Algorithm::kAuto;
  std::optional<Rational> epsilon;
  DpOptions dp;
  std::size_t brute_force_cap = kDefaultBruteForceCap;
};

struct SolveReport {
  Int value = 0;
  // One entry per input interval, in input order.
  std::vector<Int> x;
  SolveKind kind = SolveKind::kExact;
  std::optional<Rational> epsilon;
  // Input position of the interval whose value lies strictly inside it.
  std::optional<std::size_t> midrange_index;
  // What produced the answer: "target-in-interval", "empty", "fptas", "dp",
  // "brute", or "route-a" / "route-b" / "route-c".
  std::string method;
  double elapsed_seconds = 0;
  SolveStats stats;
};

namespace detail {

inline std::optional<std::size_t> strict_interior(const Instance& inst,
                                                  std::span<const Int> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > inst.intervals[i].lo && x[i] < inst.intervals[i].hi) return i;
  }
  return std::nullopt;
}

}  // namespace detail

/// Solves a validated instance in input order. Throws Error on invalid
/// requests or resource limits.
inline SolveReport solve(const Instance& inst, const SolveRequest& req) {
  const bool wants_eps =
      req.algorithm == Algorithm::kFptas || req.algorithm == Algorithm::kAuto;
  if (wants_eps && !req.epsilon) {
    throw Error(ErrorCode::kPreconditionViolated,
                std::string(algorithm_name(req.algorithm)) +
                    " needs an epsilon");
  }
  if (!wants_eps && req.epsilon) {
    throw Error(ErrorCode::kPreconditionViolated,
                std::string(algorithm_name(req.algorithm)) +
                    " takes no epsilon");
  }
  if (wants_eps) FptasParams(inst.target, *req.epsilon);  // range check

  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  PreprocessOutcome pre = preprocess(inst);
  if (auto* hit = std::get_if<ImmediateSolution>(&pre)) {
    report.value = hit->solution.total;
    report.x = to_input_order(inst, hit->solution);
    report.kind = SolveKind::kExact;
    report.method = "target-in-interval";
  } else {
    const Instance& reduced = std::get<ReducedInstance>(pre).instance;
    SolveOutcome out;
    if (reduced.empty()) {
      report.method = "empty";
      out.kind = SolveKind::kExact;
    } else {
      std::optional<PolynomialOutcome> poly;
      if (req.algorithm == Algorithm::kAuto) poly = solve_polynomial(reduced);
      if (poly) {
        out = std::move(poly->outcome);
        report.method = std::string("route-") + route_label(poly->route);
      } else {
        switch (req.algorithm) {
          case Algorithm::kAuto:
          case Algorithm::kFptas:
            out = fptas_solve(reduced, *req.epsilon);
            report.method = "fptas";
            break;
          case Algorithm::kDp:
            out = dp_exact(reduced, req.dp);
            report.method = "dp";
            break;
          case Algorithm::kBrute:
            out = brute_force_optimum(reduced, req.brute_force_cap);
            report.method = "brute";
            break;
        }
      }
    }
    if (out.solution.values.empty()) {
      out.solution = Solution::zeros(reduced.size());
    }
    report.value = out.value;
    report.x = to_input_order(reduced, out.solution);
    report.kind = out.kind;
    report.stats = out.stats;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report.stats.elapsed_seconds = report.elapsed_seconds;
  if (wants_eps && report.kind == SolveKind::kApproximate) {
    report.epsilon = req.epsilon;
  }

  // Self-check against the instance exactly as given.
  const Int checked = evaluate(inst, Solution{report.x, report.value});
  if (checked != report.value) {
    throw Error(ErrorCode::kPreconditionViolated,
                "solver reported " + to_string(report.value) +
                    " but the solution sums to " + to_string(checked));
  }
  report.midrange_index = detail::strict_interior(inst, report.x);
  return report;
}

}  // namespace issp

#endif  // ISSP_SOLVER_HPP_
