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
// Frozen envelope constants, one JSON file per claim id.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace zetasum::estlab {

struct GoldenRecord {
  std::string claim_id;
  double constant = 0.0;
  std::string grid_hash;
  std::string config_hash;
};

struct GoldenCheck {
  double frozen = 0.0;
  double observed = 0.0;
  bool freshly_frozen = false;
  bool pass = false;
  std::string note;
};

std::uint64_t fnv1a(std::string_view bytes);
/// 16 hex digits.
std::string hex_hash(std::uint64_t h);
/// Hash of the grid values printed with 17 significant digits.
std::string grid_hash(std::span<const double> grid);

class GoldenStore {
 public:
  explicit GoldenStore(std::filesystem::path dir);
  /// ZETASUM_GOLDEN_DIR when set, else fallback.
  static GoldenStore from_env(const std::filesystem::path& fallback);

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
  [[nodiscard]] std::filesystem::path path_for(std::string_view claim_id) const;
  [[nodiscard]] std::optional<GoldenRecord> load(std::string_view claim_id) const;
  void save(const GoldenRecord& record) const;

  /// Freezes the constant when no file exists. Otherwise passes iff
  /// observed <= frozen; hash mismatches are reported in the note.
  GoldenCheck check_or_freeze(const GoldenRecord& observed) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace zetasum::estlab
