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

#include "zetasum_tools/runner.hpp"

#include <algorithm>
#include <cmath>

#include "evaluators.hpp"
#include "zetasum/kernel/parallel.hpp"

namespace zetasum::tools {

namespace {

std::vector<SuiteInfo> load_manifest() {
  std::vector<SuiteInfo> suites;
  const auto root = nlohmann::json::parse(detail::kManifestText);
  for (const auto& j : root.at("suites")) {
    SuiteInfo s;
    s.id = j.at("id").get<std::string>();
    s.criterion = j.at("criterion").get<int>();
    s.evaluator = j.at("evaluator").get<std::string>();
    s.anchor = j.at("anchor").get<std::string>();
    s.runtime_limit_s = j.at("runtime_limit_s").get<double>();
    s.params = j.at("params");
    if (s.anchor.empty()) throw Error("suite " + s.id + " has an empty anchor");
    suites.push_back(std::move(s));
  }
  return suites;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

class ThreadScope {
 public:
  explicit ThreadScope(int threads) : previous_(kernel::thread_count()) {
    kernel::set_thread_count(threads);
  }
  ~ThreadScope() { kernel::set_thread_count(previous_); }
  ThreadScope(const ThreadScope&) = delete;
  ThreadScope& operator=(const ThreadScope&) = delete;

 private:
  int previous_;
};

}  // namespace

const std::vector<SuiteInfo>& registered_suites() {
  static const std::vector<SuiteInfo> suites = load_manifest();
  return suites;
}

const SuiteInfo& find_suite(const std::string& id) {
  const auto& suites = registered_suites();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const SuiteInfo& s) { return s.id == id; });
  if (it != suites.end()) return *it;
  std::string msg = "unknown suite '" + id + "'; registered suites:";
  for (const auto& s : suites) msg += " " + s.id;
  throw UsageError(msg);
}

nlohmann::json effective_params(const SuiteInfo& suite, const ExperimentConfig& config) {
  nlohmann::json p = suite.params;
  if (!config.sigma_list.empty()) {
    if (!p.contains("sigma")) throw UsageError("suite " + suite.id + " does not take --sigma");
    p["sigma"] = config.sigma_list;
  }
  if (config.t_grid) {
    const auto& g = *config.t_grid;
    if (g.points < 5) throw UsageError("t grid needs at least 5 points");
    if (!(g.t_min > 0.0 && g.t_max > g.t_min) || !std::isfinite(g.t_max)) {
      throw UsageError("t grid needs 0 < t_min < t_max");
    }
    if (!p.contains("grid") && !p.contains("t_list")) {
      throw UsageError("suite " + suite.id + " has no t grid");
    }
    p.erase("t_list");
    p["grid"] = {{"t_min", g.t_min}, {"t_max", g.t_max}, {"points", g.points}};
  }
  if (config.delta) {
    bool used = false;
    for (auto& [key, value] : p.items()) {
      if (ends_with(key, "delta") && value.is_number()) {
        value = *config.delta;
        used = true;
      }
    }
    if (!used) throw UsageError("suite " + suite.id + " does not take --delta");
  }
  if (config.delta2 || config.delta3) {
    if (!p.contains("delta_pairs")) {
      throw UsageError("suite " + suite.id + " does not take --delta2/--delta3");
    }
    if (!(config.delta2 && config.delta3)) throw UsageError("--delta2 and --delta3 go together");
    p["delta_pairs"] = nlohmann::json::array({{*config.delta2, *config.delta3}});
  }
  if (config.seed && p.contains("seed")) p["seed"] = *config.seed;
  return p;
}

std::vector<ClaimRecord> run_suite(const ExperimentConfig& config, const estlab::GoldenStore& store) {
  const SuiteInfo& suite = find_suite(config.suite);
  const auto& eval = detail::evaluator(suite.evaluator);
  detail::Context ctx{suite, effective_params(suite, config), config, store};
  ThreadScope threads(config.threads);
  auto records = eval(ctx);
  for (auto& r : records) {
    r.claim_id = suite.id;
    r.anchor = suite.anchor;
  }
  return records;
}

bool all_pass(const std::vector<ClaimRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const ClaimRecord& r) { return r.pass; });
}

std::filesystem::path default_golden_dir() { return ZETASUM_DEFAULT_GOLDEN_DIR; }

}  // namespace zetasum::tools
