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
// Suite registry and runner.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zetasum/common.hpp"
#include "zetasum/golden.hpp"
#include "zetasum_tools/records.hpp"

namespace zetasum::tools {

struct TGrid {
  double t_min = 0.0;
  double t_max = 0.0;
  int points = 0;
};

/// Overrides left empty fall back to the suite defaults in the manifest.
struct ExperimentConfig {
  std::string suite;
  std::vector<double> sigma_list;
  std::optional<TGrid> t_grid;
  std::optional<double> delta;
  std::optional<double> delta2;
  std::optional<double> delta3;
  int threads = 0;
  Precision precision = Precision::standard;
  OutFormat out_format = OutFormat::csv;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

struct SuiteInfo {
  std::string id;
  int criterion = 0;
  std::string evaluator;
  std::string anchor;
  double runtime_limit_s = 0.0;
  nlohmann::json params;
};

/// Suites from the manifest compiled into the runner.
const std::vector<SuiteInfo>& registered_suites();
/// Throws UsageError listing the registered ids for an unknown id.
const SuiteInfo& find_suite(const std::string& id);

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Suite defaults with the config overrides applied. Throws UsageError for
/// invalid overrides (fewer than 5 grid points, t_min >= t_max, ...).
nlohmann::json effective_params(const SuiteInfo& suite, const ExperimentConfig& config);

/// Runs the suite; golden constants are read from and frozen into store.
/// Thread count is set for the duration of the run.
std::vector<ClaimRecord> run_suite(const ExperimentConfig& config, const estlab::GoldenStore& store);

bool all_pass(const std::vector<ClaimRecord>& records);

/// Directory holding the committed golden files.
std::filesystem::path default_golden_dir();

}  // namespace zetasum::tools
