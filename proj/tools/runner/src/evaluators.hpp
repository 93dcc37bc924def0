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

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetasum_tools/runner.hpp"

namespace zetasum::tools::detail {

struct Context {
  const SuiteInfo& suite;
  nlohmann::json params;
  const ExperimentConfig& config;
  const estlab::GoldenStore& store;
};

using Evaluator = std::function<std::vector<ClaimRecord>(const Context&)>;

/// Throws UsageError for an unknown name.
const Evaluator& evaluator(const std::string& name);

extern const char* const kManifestText;

}  // namespace zetasum::tools::detail
