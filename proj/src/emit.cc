// Copyright 2026 The qgenocchi Authors.
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

#include "qgenocchi/emit.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qgen {
namespace {

using Json = nlohmann::ordered_json;

Json PointJson(const IdentityReport& r) {
  Json point = Json::object();
  for (const auto& c : r.point) {
    std::visit([&](const auto& v) { point[c.key] = v; }, c.value);
  }
  return point;
}

Json ReportJson(const IdentityReport& r) {
  Json j;
  j["identity"] = IdentityName(r.identity);
  j["variant"] = VariantTagName(r.variant);
  j["point"] = PointJson(r);
  if (r.verdict == Verdict::kSkipped) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
  } else {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  j["verdict"] = VerdictName(r.verdict);
  if (r.verdict == Verdict::kFail) j["difference"] = r.difference;
  if (r.verdict == Verdict::kSkipped) j["reason"] = r.reason;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::string RenderJson(const RunResult& result) {
  Json root;
  root["reports"] = Json::array();
  for (const auto& r : result.reports) root["reports"].push_back(ReportJson(r));
  root["summary"] = Json::array();
  for (const auto& s : result.summaries) {
    Json j;
    j["identity"] = IdentityName(s.identity);
    j["variant"] = VariantTagName(s.variant);
    j["pass"] = s.pass;
    j["fail"] = s.fail;
    j["skipped"] = s.skipped;
    if (s.first_counterexample) {
      j["first_counterexample"] = ReportJson(*s.first_counterexample);
    }
    root["summary"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string PointField(const IdentityReport& r) {
  std::string s = r.PointString();
  for (char& c : s) {
    if (c == ' ') c = ';';
  }
  return s;
}

std::string VerdictField(const IdentityReport& r) {
  if (r.verdict == Verdict::kSkipped) return "SKIPPED(" + r.reason + ")";
  return VerdictName(r.verdict);
}

std::string RenderCsv(const RunResult& result) {
  std::ostringstream os;
  os << "identity,variant,point,lhs,rhs,verdict,difference\n";
  for (const auto& r : result.reports) {
    os << IdentityName(r.identity) << ',' << VariantTagName(r.variant) << ','
       << CsvField(PointField(r)) << ',' << CsvField(r.lhs) << ','
       << CsvField(r.rhs) << ',' << CsvField(VerdictField(r)) << ','
       << CsvField(r.difference) << '\n';
  }
  return os.str();
}

std::string RenderMarkdown(const RunResult& result) {
  std::ostringstream os;
  os << "# Identity verification report\n\n";
  os << "| identity | variant | pass | fail | skipped |\n";
  os << "|---|---|---:|---:|---:|\n";
  for (const auto& s : result.summaries) {
    os << "| " << IdentityName(s.identity) << " | " << VariantTagName(s.variant)
       << " | " << s.pass << " | " << s.fail << " | " << s.skipped << " |\n";
  }
  bool any = false;
  for (const auto& s : result.summaries) {
    if (!s.first_counterexample) continue;
    if (!any) os << "\n## First counterexamples\n\n";
    any = true;
    const auto& r = *s.first_counterexample;
    os << "- `" << IdentityName(r.identity) << "` (" << VariantTagName(r.variant)
       << ") at `" << r.PointString() << "`: lhs = `" << r.lhs << "`, rhs = `"
       << r.rhs << "`, difference = `" << r.difference << "`\n";
  }
  return os.str();
}

}  // namespace

ReportFormat ParseReportFormat(const std::string& name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown") return ReportFormat::kMarkdown;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string RenderReports(const RunResult& result, ReportFormat format) {
  if (result.reports.empty()) {
    throw std::invalid_argument("no reports to emit");
  }
  switch (format) {
    case ReportFormat::kJson:
      return RenderJson(result);
    case ReportFormat::kCsv:
      return RenderCsv(result);
    case ReportFormat::kMarkdown:
      return RenderMarkdown(result);
  }
  return "";
}

void EmitReports(const RunResult& result, ReportFormat format,
                 const std::string& path) {
  const std::string text = RenderReports(result, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace qgen
