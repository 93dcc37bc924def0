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
// Claim records and their CSV / JSON artifacts.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zetasum/common.hpp"
#include "zetasum/estlab.hpp"

namespace zetasum::tools {

enum class OutFormat { csv, json };

OutFormat out_format_from_string(const std::string& name);

/// One evaluated grid point. Unused parameters are NaN.
struct Sample {
  double sigma = 0.0;
  double t = 0.0;
  double param1 = 0.0;
  double param2 = 0.0;
  Complex value;
  double magnitude = 0.0;
  double envelope = 0.0;
  double ratio = 0.0;
  bool pass = true;
};

struct ClaimRecord {
  std::string claim_id;
  std::string anchor;
  std::string label;
  std::vector<Sample> samples;
  int ln_power = 0;
  std::optional<estlab::FitReport> fit;
  bool pass = false;
  std::string note;

  /// Samples as (t, magnitude) in order.
  [[nodiscard]] estlab::SampleSeries series() const;
};

inline constexpr const char* kCsvHeader =
    "claim_id,sigma,t,param1,param2,value_re,value_im,magnitude,envelope,ratio,slope,verdict";

/// One row per sample; slope is the record's fitted slope (NaN without a fit)
/// and verdict is pass only when both the sample and the record pass.
void emit_csv(const std::vector<ClaimRecord>& records, std::ostream& out);
void emit_json(const std::vector<ClaimRecord>& records, std::ostream& out);
std::string to_text(const std::vector<ClaimRecord>& records, OutFormat format);
/// Throws Error naming the path on IO failure.
void write_artifact(const std::vector<ClaimRecord>& records, OutFormat format,
                    const std::filesystem::path& path);
std::vector<ClaimRecord> parse_json(const std::string& text);

}  // namespace zetasum::tools
