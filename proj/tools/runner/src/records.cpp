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

#include "zetasum_tools/records.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace zetasum::tools {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) { return fmt::format("{:.17g}", v); }

// Claim ids and labels never contain commas or quotes, so no CSV quoting.
void csv_row(std::ostream& out, const ClaimRecord& r, const Sample& s) {
  const double slope = r.fit ? r.fit->slope : kNaN;
  out << r.claim_id << ',' << num(s.sigma) << ',' << num(s.t) << ',' << num(s.param1) << ','
      << num(s.param2) << ',' << num(s.value.real()) << ',' << num(s.value.imag()) << ','
      << num(s.magnitude) << ',' << num(s.envelope) << ',' << num(s.ratio) << ',' << num(slope)
      << ',' << (r.pass && s.pass ? "pass" : "fail") << '\n';
}

nlohmann::json number(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

double number_from(const nlohmann::json& j) { return j.is_null() ? kNaN : j.get<double>(); }

}  // namespace

OutFormat out_format_from_string(const std::string& name) {
  if (name == "csv") return OutFormat::csv;
  if (name == "json") return OutFormat::json;
  throw Error("unknown output format '" + name + "' (expected csv or json)");
}

estlab::SampleSeries ClaimRecord::series() const {
  estlab::SampleSeries s;
  s.label = label;
  s.ln_power = ln_power;
  for (const auto& p : samples) s.points.push_back({p.t, p.magnitude});
  return s;
}

void emit_csv(const std::vector<ClaimRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    for (const auto& s : r.samples) csv_row(out, r, s);
  }
}

void emit_json(const std::vector<ClaimRecord>& records, std::ostream& out) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json jr;
    jr["claim_id"] = r.claim_id;
    jr["anchor"] = r.anchor;
    jr["label"] = r.label;
    jr["ln_power"] = r.ln_power;
    jr["verdict"] = r.pass ? "pass" : "fail";
    jr["note"] = r.note;
    if (r.fit) {
      const auto& f = *r.fit;
      nlohmann::ordered_json jf;
      jf["slope"] = number(f.slope);
      jf["intercept"] = number(f.intercept);
      jf["residual_rms"] = number(f.residual_rms);
      jf["used_points"] = f.used_points;
      jf["dropped_zeros"] = f.dropped_zeros;
      jf["max_ratio_constant"] = number(f.max_ratio_constant);
      jf["claimed_exponent"] = number(f.claimed_exponent);
      jf["tolerance"] = number(f.tolerance);
      jf["verdict"] = f.pass ? "pass" : "fail";
      jr["fit"] = jf;
    } else {
      jr["fit"] = nullptr;
    }
    auto samples = nlohmann::ordered_json::array();
    for (const auto& s : r.samples) {
      nlohmann::ordered_json js;
      js["sigma"] = number(s.sigma);
      js["t"] = number(s.t);
      js["param1"] = number(s.param1);
      js["param2"] = number(s.param2);
      js["value_re"] = number(s.value.real());
      js["value_im"] = number(s.value.imag());
      js["magnitude"] = number(s.magnitude);
      js["envelope"] = number(s.envelope);
      js["ratio"] = number(s.ratio);
      js["verdict"] = s.pass ? "pass" : "fail";
      samples.push_back(js);
    }
    jr["samples"] = samples;
    arr.push_back(jr);
  }
  nlohmann::ordered_json root;
  root["records"] = arr;
  out << root.dump(2) << '\n';
}

std::string to_text(const std::vector<ClaimRecord>& records, OutFormat format) {
  std::ostringstream out;
  if (format == OutFormat::csv) {
    emit_csv(records, out);
  } else {
    emit_json(records, out);
  }
  return out.str();
}

void write_artifact(const std::vector<ClaimRecord>& records, OutFormat format,
                    const std::filesystem::path& path) {
  const std::string text = to_text(records, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + path.string());
  out << text;
  out.close();
  if (!out) throw Error("failed writing output file " + path.string());
}

std::vector<ClaimRecord> parse_json(const std::string& text) {
  std::vector<ClaimRecord> records;
  try {
    const auto root = nlohmann::json::parse(text);
    for (const auto& jr : root.at("records")) {
      ClaimRecord r;
      r.claim_id = jr.at("claim_id").get<std::string>();
      r.anchor = jr.at("anchor").get<std::string>();
      r.label = jr.at("label").get<std::string>();
      r.ln_power = jr.at("ln_power").get<int>();
      r.pass = jr.at("verdict").get<std::string>() == "pass";
      r.note = jr.at("note").get<std::string>();
      if (!jr.at("fit").is_null()) {
        const auto& jf = jr.at("fit");
        estlab::FitReport f;
        f.slope = number_from(jf.at("slope"));
        f.intercept = number_from(jf.at("intercept"));
        f.residual_rms = number_from(jf.at("residual_rms"));
        f.used_points = jf.at("used_points").get<Index>();
        f.dropped_zeros = jf.at("dropped_zeros").get<bool>();
        f.max_ratio_constant = number_from(jf.at("max_ratio_constant"));
        f.claimed_exponent = number_from(jf.at("claimed_exponent"));
        f.tolerance = number_from(jf.at("tolerance"));
        f.pass = jf.at("verdict").get<std::string>() == "pass";
        r.fit = f;
      }
      for (const auto& js : jr.at("samples")) {
        Sample s;
        s.sigma = number_from(js.at("sigma"));
        s.t = number_from(js.at("t"));
        s.param1 = number_from(js.at("param1"));
        s.param2 = number_from(js.at("param2"));
        s.value = {number_from(js.at("value_re")), number_from(js.at("value_im"))};
        s.magnitude = number_from(js.at("magnitude"));
        s.envelope = number_from(js.at("envelope"));
        s.ratio = number_from(js.at("ratio"));
        s.pass = js.at("verdict").get<std::string>() == "pass";
        r.samples.push_back(s);
      }
      records.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed record JSON: ") + e.what());
  }
  return records;
}

}  // namespace zetasum::tools
