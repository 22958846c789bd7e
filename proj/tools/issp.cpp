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

// Command-line front end: solve, generate, bench, classify.
//
// Exit codes: 0 ok, 1 internal error, 2 unreadable or invalid instance,
// 3 bad flags, 4 resource budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "issp/analysis.hpp"
#include "issp/bench.hpp"
#include "issp/instgen.hpp"
#include "issp/io.hpp"
#include "issp/solver.hpp"
#include "json.hpp"

namespace {

using issp::Int;
using issp::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitFlags = 3;
constexpr int kExitBudget = 4;

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json int_json(Int v) {
  if (issp::fits_int64(v)) return static_cast<std::int64_t>(v);
  return issp::to_string(v);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

issp::Instance load_instance(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw issp::ParseError(0, "cannot open " + path);
    text = read_all(file);
  }
  return issp::parse_instance(text);
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  auto r = Rational::parse(text);
  if (!r) throw FlagError(name + ": not a number: '" + text + "'");
  return *r;
}

std::size_t memory_budget_from_env() {
  const char* mb = std::getenv("ISSP_MEMORY_BUDGET_MB");
  if (mb == nullptr || *mb == '\0') return issp::kDefaultMemoryBudgetBytes;
  auto v = issp::parse_int(mb);
  if (!v || *v < 1 || *v > (Int{1} << 40)) {
    throw FlagError("ISSP_MEMORY_BUDGET_MB must be a positive integer");
  }
  return static_cast<std::size_t>(*v) << 20;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// solve ----------------------------------------------------------------------

struct SolveArgs {
  std::string path;
  std::string algorithm = "auto";
  std::string epsilon;
  bool json = false;
};

int run_solve(const SolveArgs& args) {
  auto algo = issp::parse_algorithm(args.algorithm);
  if (!algo) throw FlagError("unknown algorithm '" + args.algorithm + "'");
  issp::SolveRequest req;
  req.algorithm = *algo;
  const bool wants_eps =
      *algo == issp::Algorithm::kFptas || *algo == issp::Algorithm::kAuto;
  if (wants_eps && args.epsilon.empty()) {
    throw FlagError(args.algorithm + " needs --epsilon");
  }
  if (!wants_eps && !args.epsilon.empty()) {
    throw FlagError(args.algorithm + " does not take --epsilon");
  }
  if (wants_eps) {
    req.epsilon = parse_rational_flag("--epsilon", args.epsilon);
    if (*req.epsilon <= Rational(0) || *req.epsilon >= Rational(1)) {
      throw FlagError("--epsilon must lie strictly between 0 and 1");
    }
  }
  req.dp.memory_budget_bytes = memory_budget_from_env();

  const issp::Instance inst = load_instance(args.path);
  const issp::SolveReport rep = issp::solve(inst, req);

  if (args.json) {
    json out;
    out["value"] = int_json(rep.value);
    json xs = json::array();
    for (Int v : rep.x) xs.push_back(int_json(v));
    out["x"] = std::move(xs);
    out["kind"] = issp::to_string(rep.kind);
    out["epsilon"] = rep.epsilon ? json(rep.epsilon->to_string()) : json();
    out["midrange_index"] =
        rep.midrange_index ? json(*rep.midrange_index + 1) : json();
    out["method"] = rep.method;
    out["elapsed_seconds"] = rep.elapsed_seconds;
    out["peak_bucket_slots"] = rep.stats.peak_bucket_slots;
    out["dc_calls"] = rep.stats.dc_calls;
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "value " << issp::to_string(rep.value) << "\n";
  std::cout << "x";
  for (Int v : rep.x) std::cout << ' ' << issp::to_string(v);
  std::cout << "\n";
  std::cout << "kind " << issp::to_string(rep.kind);
  if (rep.epsilon) std::cout << " (epsilon " << rep.epsilon->to_string() << ")";
  std::cout << "\n";
  std::cout << "midrange "
            << (rep.midrange_index ? std::to_string(*rep.midrange_index + 1)
                                   : std::string("none"))
            << "\n";
  std::cout << "method " << rep.method << "\n";
  std::cout << "elapsed_s " << rep.elapsed_seconds << "\n";
  return 0;
}

// generate -------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::string ratio;  // --c
  std::string cap;    // --C
  std::optional<std::uint64_t> seed;
};

issp::GenSpec make_gen_spec(const GenerateArgs& args) {
  auto family = issp::parse_family(args.family);
  if (!family) throw FlagError("unknown family '" + args.family + "'");
  issp::GenSpec spec;
  spec.family = *family;
  spec.n = args.n;
  spec.seed = args.seed.value_or(0);
  const bool has_c = !args.ratio.empty();
  const bool has_cap = !args.cap.empty();
  switch (*family) {
    case issp::Family::kA:
    case issp::Family::kB:
      if (has_c || has_cap || args.seed) {
        throw FlagError("families A and B take only --n");
      }
      if (*family == issp::Family::kA && args.n > issp::kMaxFamilyAN) {
        throw FlagError("family A needs --n <= 62");
      }
      break;
    case issp::Family::kC:
      if (!has_c || has_cap) throw FlagError("family C needs --c and no --C");
      spec.ratio = parse_rational_flag("--c", args.ratio);
      break;
    case issp::Family::kD:
      if (!has_cap || has_c) throw FlagError("family D needs --C and no --c");
      spec.ratio = parse_rational_flag("--C", args.cap);
      break;
  }
  if ((*family == issp::Family::kC || *family == issp::Family::kD) &&
      spec.ratio <= Rational(1)) {
    throw FlagError("ratio must exceed 1");
  }
  if (args.n < 1) throw FlagError("--n must be at least 1");
  return spec;
}

int run_generate(const GenerateArgs& args) {
  const issp::GenSpec spec = make_gen_spec(args);
  std::cout << issp::serialize_instance(issp::generate(spec));
  return 0;
}

// bench ----------------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::string epsilons = "0.1,0.01,0.001";
  std::string sizes;
  std::string params;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

int run_bench(const BenchArgs& args) {
  auto family = issp::parse_family(args.suite);
  if (!family) throw FlagError("unknown suite '" + args.suite + "'");
  std::vector<std::size_t> sizes;
  std::vector<std::optional<Rational>> params;
  std::size_t trials = args.trials;
  switch (*family) {
    case issp::Family::kA:
      sizes = {10, 15, 20, 25, 30, 35};
      params = {std::nullopt};
      if (trials == 0) trials = 1;
      break;
    case issp::Family::kB:
      sizes = {10, 50, 100, 500};
      params = {std::nullopt};
      if (trials == 0) trials = 1;
      break;
    case issp::Family::kC:
    case issp::Family::kD:
      sizes = {1000, 5000, 10000, 50000, 100000};
      params = {Rational(3, 2), Rational(13, 10), Rational(11, 10)};
      if (trials == 0) trials = 100;
      break;
  }
  if (!args.sizes.empty()) {
    sizes.clear();
    for (const auto& s : split_list(args.sizes)) {
      auto v = issp::parse_int(s);
      if (!v || *v < 1) throw FlagError("--n: bad size '" + s + "'");
      sizes.push_back(static_cast<std::size_t>(*v));
    }
  }
  if (!args.params.empty()) {
    if (*family == issp::Family::kA || *family == issp::Family::kB) {
      throw FlagError("suites A and B take no --params");
    }
    params.clear();
    for (const auto& s : split_list(args.params)) {
      Rational r = parse_rational_flag("--params", s);
      if (r <= Rational(1)) throw FlagError("--params entries must exceed 1");
      params.push_back(r);
    }
  }
  if (*family == issp::Family::kA) {
    for (std::size_t n : sizes) {
      if (n > issp::kMaxFamilyAN) throw FlagError("suite A needs n <= 62");
    }
  }
  std::vector<Rational> epsilons;
  for (const auto& s : split_list(args.epsilons)) {
    Rational e = parse_rational_flag("--epsilons", s);
    if (e <= Rational(0) || e >= Rational(1)) {
      throw FlagError("--epsilons entries must lie strictly between 0 and 1");
    }
    epsilons.push_back(e);
  }
  if (epsilons.empty()) throw FlagError("--epsilons is empty");

  issp::BenchOptions opts;
  opts.trials = trials;
  opts.seed = args.seed;
  opts.threads = std::max<std::size_t>(1, args.threads);
  opts.memory_budget_bytes = memory_budget_from_env();

  std::cout << issp::kBenchCsvHeader << "\n";
  for (std::size_t n : sizes) {
    for (const auto& p : params) {
      for (const auto& e : epsilons) {
        issp::BenchCell cell{*family, n, p, e};
        std::cout << issp::to_csv_row(issp::run_cell(cell, opts)) << "\n"
                  << std::flush;
      }
    }
  }
  return 0;
}

// classify -------------------------------------------------------------------

struct ClassifyArgs {
  std::string path;
  bool json = false;
};

int run_classify(const ClassifyArgs& args) {
  const issp::Instance inst = load_instance(args.path);
  json out;
  out["n"] = inst.size();
  out["target"] = int_json(inst.target);
  out["target_above_max_hi"] = inst.satisfies_target_bound();

  issp::PreprocessOutcome pre = issp::preprocess(inst);
  if (auto* hit = std::get_if<issp::ImmediateSolution>(&pre)) {
    out["target_in_interval"] = hit->index + 1;
    out["route"] = "target-in-interval";
    out["value"] = int_json(hit->solution.total);
  } else {
    const issp::Instance& reduced = std::get<issp::ReducedInstance>(pre).instance;
    out["dropped"] = inst.size() - reduced.size();
    const issp::ConditionCheck gaps = issp::check_gap_condition(reduced);
    out["gap_condition"] = gaps.holds;
    if (gaps.diagnostic) out["gap_diagnostic"] = *gaps.diagnostic;
    const Rational ratio = issp::min_ratio(reduced);
    out["min_ratio"] = ratio.to_string();
    out["min_ratio_at_least_2"] = ratio >= Rational(2);
    auto poly = reduced.empty() ? std::nullopt : issp::solve_polynomial(reduced);
    if (reduced.empty()) {
      out["route"] = "empty";
      out["value"] = 0;
    } else if (poly) {
      out["route"] = issp::route_label(poly->route);
      out["value"] = int_json(poly->outcome.value);
    } else {
      out["route"] = "none";
    }
  }
  if (args.json) {
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const auto& [key, value] : out.items()) {
    std::cout << key << ' ';
    if (value.is_boolean()) {
      std::cout << (value.get<bool>() ? "yes" : "no");
    } else if (value.is_string()) {
      std::cout << value.get<std::string>();
    } else {
      std::cout << value.dump();
    }
    std::cout << "\n";
  }
  return 0;
}

int exit_code_for(const issp::Error& e) {
  switch (e.code()) {
    case issp::ErrorCode::kMemoryBudgetExceeded:
    case issp::ErrorCode::kInstanceTooLarge:
      return kExitBudget;
    case issp::ErrorCode::kNonPositiveEndpoint:
    case issp::ErrorCode::kInvertedInterval:
    case issp::ErrorCode::kNonPositiveTarget:
    case issp::ErrorCode::kValueTooLarge:
      return kExitParse;
    case issp::ErrorCode::kEpsilonOutOfRange:
    case issp::ErrorCode::kNOutOfRange:
      return kExitFlags;
    default:
      return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval subset sum solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("path", solve_args.path, "Instance file (default stdin)");
  solve->add_option("--algorithm", solve_args.algorithm,
                    "fptas, dp, brute or auto")
      ->capture_default_str();
  solve->add_option("--epsilon", solve_args.epsilon,
                    "Relative error for fptas/auto, e.g. 0.01 or 1/100");
  solve->add_flag("--json", solve_args.json, "Print a JSON object");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Print a generated instance");
  gen->add_option("--family", gen_args.family, "A, B, C or D")->required();
  gen->add_option("--n", gen_args.n, "Number of intervals")->required();
  gen->add_option("--c", gen_args.ratio, "Endpoint ratio for family C");
  gen->add_option("--C", gen_args.cap, "Ratio upper bound for family D");
  gen->add_option("--seed", gen_args.seed, "Seed for families C and D");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite, CSV out");
  bench->add_option("--suite", bench_args.suite, "A, B, C or D")->required();
  bench->add_option("--epsilons", bench_args.epsilons, "Comma-separated")
      ->capture_default_str();
  bench->add_option("--n", bench_args.sizes, "Comma-separated sizes");
  bench->add_option("--params", bench_args.params,
                    "Comma-separated ratios (C) or ratio caps (D)");
  bench->add_option("--trials", bench_args.trials,
                    "Instances per cell (default 1 for A/B, 100 for C/D)");
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--threads", bench_args.threads)->capture_default_str();

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Report tractable cases");
  classify->add_option("path", classify_args.path, "Instance file");
  classify->add_flag("--json", classify_args.json, "Print a JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFlags;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*gen) return run_generate(gen_args);
    if (*bench) return run_bench(bench_args);
    if (*classify) return run_classify(classify_args);
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  } catch (const issp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const issp::Error& e) {
    std::cerr << "error: " << issp::error_code_name(e.code()) << ": "
              << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
