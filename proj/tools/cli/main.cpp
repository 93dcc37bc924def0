// Copyright 2026 The zetasum Authors
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
// zetasum command-line front end.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zetasum/kernel/oracle.hpp"
#include "zetasum_tools/runner.hpp"

namespace {

using namespace zetasum;

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

std::string read_spec(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw tools::UsageError("cannot read oracle spec file " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_oracle(const std::string& arg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_spec(arg));
  } catch (const nlohmann::json::exception& e) {
    throw tools::UsageError(std::string("oracle spec is not valid JSON: ") + e.what());
  }
  SumSpec spec;
  try {
    spec.phase = phase_kind_from_string(j.value("phase", std::string("F3")));
    spec.sigma = j.at("sigma").get<double>();
    spec.t = j.at("t").get<double>();
    spec.lo = j.value("lo", Index{1});
    spec.hi = j.at("hi").get<Index>();
    spec.conjugate = j.value("conjugate", false);
  } catch (const nlohmann::json::exception& e) {
    throw tools::UsageError(std::string("oracle spec needs sigma, t and hi: ") + e.what());
  }
  const auto r = kernel::oracle_recompute(spec);
  nlohmann::ordered_json out;
  out["phase"] = std::string(to_string(spec.phase));
  out["sigma"] = spec.sigma;
  out["t"] = spec.t;
  out["lo"] = spec.lo;
  out["hi"] = spec.hi;
  out["conjugate"] = spec.conjugate;
  out["terms"] = r.terms;
  out["empty_set"] = r.empty_set;
  out["value_re"] = r.value.re.hi;
  out["value_re_lo"] = r.value.re.lo;
  out["value_im"] = r.value.im.hi;
  out["value_im_lo"] = r.value.im.lo;
  std::cout << out.dump(2) << '\n';
  return kExitPass;
}

int run(const tools::ExperimentConfig& config) {
  const auto store = estlab::GoldenStore::from_env(tools::default_golden_dir());
  const auto records = tools::run_suite(config, store);
  if (config.out_path.empty() || config.out_path == "-") {
    std::cout << tools::to_text(records, config.out_format);
  } else {
    tools::write_artifact(records, config.out_format, config.out_path);
  }
  for (const auto& r : records) {
    std::cerr << fmt::format("{} [{}] {}", r.pass ? "pass" : "FAIL", r.claim_id, r.label);
    if (r.fit) std::cerr << fmt::format(" slope={:.6g}", r.fit->slope);
    std::cerr << '\n';
  }
  return tools::all_pass(records) ? kExitPass : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential-sum experiments: identities, growth exponents and frozen envelopes"};
  app.require_subcommand(1);

  tools::ExperimentConfig config;
  double t_min = 0.0;
  double t_max = 0.0;
  int points = 0;
  double delta = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  std::uint64_t seed = 0;
  std::string precision = "standard";
  std::string format = "csv";

  auto* run_cmd = app.add_subcommand("run", "Run a registered suite");
  run_cmd->add_option("--suite", config.suite, "Suite id (see list-suites)")->required();
  auto* o_tmin = run_cmd->add_option("--t-min", t_min, "Smallest t of the log grid");
  auto* o_tmax = run_cmd->add_option("--t-max", t_max, "Largest t of the log grid");
  auto* o_points = run_cmd->add_option("--points", points, "Log grid points (>= 5)");
  o_tmin->needs(o_tmax)->needs(o_points);
  o_tmax->needs(o_tmin)->needs(o_points);
  o_points->needs(o_tmin)->needs(o_tmax);
  run_cmd->add_option("--sigma", config.sigma_list, "Sigma values")->delimiter(',');
  auto* o_delta = run_cmd->add_option("--delta", delta, "Delta for single-delta suites");
  auto* o_delta2 = run_cmd->add_option("--delta2", delta2, "Lower-ratio delta of the M set");
  auto* o_delta3 = run_cmd->add_option("--delta3", delta3, "Upper-ratio delta of the M set");
  run_cmd->add_option("--threads", config.threads, "Worker threads (0 = hardware)");
  run_cmd->add_option("--precision", precision, "standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  auto* o_seed = run_cmd->add_option("--seed", seed, "Seed for randomized draws");
  run_cmd->add_option("--out", config.out_path, "Output path (stdout when omitted)");
  run_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* list_cmd = app.add_subcommand("list-suites", "List registered suites");

  std::string spec_arg;
  auto* oracle_cmd = app.add_subcommand("oracle", "Recompute a single sum in double-double precision");
  oracle_cmd->add_option("--spec", spec_arg, "JSON object or path to a JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& s : tools::registered_suites()) {
        std::cout << fmt::format("{:<26} criterion {:>2}  {}\n", s.id, s.criterion, s.anchor);
      }
      return kExitPass;
    }
    if (oracle_cmd->parsed()) return run_oracle(spec_arg);

    if (*o_tmin) config.t_grid = tools::TGrid{t_min, t_max, points};
    if (*o_delta) config.delta = delta;
    if (*o_delta2) config.delta2 = delta2;
    if (*o_delta3) config.delta3 = delta3;
    if (*o_seed) config.seed = seed;
    config.precision = precision == "extended" ? Precision::extended : Precision::standard;
    config.out_format = tools::out_format_from_string(format);
    return run(config);
  } catch (const tools::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
