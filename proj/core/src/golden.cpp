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

#include "zetasum/golden.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "zetasum/common.hpp"

namespace zetasum::estlab {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_hash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string grid_hash(std::span<const double> grid) {
  std::string text;
  char buf[32];
  for (double v : grid) {
    std::snprintf(buf, sizeof buf, "%.17g;", v);
    text += buf;
  }
  return hex_hash(fnv1a(text));
}

GoldenStore::GoldenStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

GoldenStore GoldenStore::from_env(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("ZETASUM_GOLDEN_DIR"); env != nullptr && *env != '\0') {
    return GoldenStore(env);
  }
  return GoldenStore(fallback);
}

std::filesystem::path GoldenStore::path_for(std::string_view claim_id) const {
  return dir_ / (std::string(claim_id) + ".json");
}

std::optional<GoldenRecord> GoldenStore::load(std::string_view claim_id) const {
  const auto path = path_for(claim_id);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    GoldenRecord r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.constant = j.at("constant").get<double>();
    r.grid_hash = j.at("grid_hash").get<std::string>();
    r.config_hash = j.at("config_hash").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed golden file " + path.string() + ": " + e.what());
  }
}

void GoldenStore::save(const GoldenRecord& record) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = path_for(record.claim_id);
  std::ofstream out(path);
  if (!out) throw Error("cannot write golden file " + path.string());
  nlohmann::ordered_json j;
  j["claim_id"] = record.claim_id;
  j["constant"] = record.constant;
  j["grid_hash"] = record.grid_hash;
  j["config_hash"] = record.config_hash;
  out << j.dump(2) << '\n';
  if (!out) throw Error("cannot write golden file " + path.string());
}

GoldenCheck GoldenStore::check_or_freeze(const GoldenRecord& observed) const {
  GoldenCheck c;
  c.observed = observed.constant;
  const auto frozen = load(observed.claim_id);
  if (!frozen) {
    save(observed);
    c.frozen = observed.constant;
    c.freshly_frozen = true;
    c.pass = std::isfinite(observed.constant);
    c.note = "frozen";
    return c;
  }
  c.frozen = frozen->constant;
  c.pass = observed.constant <= frozen->constant;
  c.note = c.pass ? "within frozen constant" : "exceeds frozen constant";
  if (frozen->grid_hash != observed.grid_hash) c.note += "; grid differs from the frozen run";
  if (frozen->config_hash != observed.config_hash) c.note += "; config differs from the frozen run";
  return c;
}

}  // namespace zetasum::estlab
