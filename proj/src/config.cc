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

#include "qgenocchi/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace qgen {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (item.empty()) throw std::invalid_argument("empty list entry");
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int ParseInt(const std::string& s) {
  int v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
  return v;
}

double ParseDouble(const std::string& s) {
  size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) {
    throw std::invalid_argument("expected a number, got '" + s + "'");
  }
  return v;
}

// "a..b" or a single integer.
IntRange ParseRange(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = ParseInt(s);
    return IntRange{v, v};
  }
  IntRange r{ParseInt(Trim(s.substr(0, dots))), ParseInt(Trim(s.substr(dots + 2)))};
  if (r.empty()) throw std::invalid_argument("range '" + s + "' is empty");
  return r;
}

std::vector<Rat> ParseRatList(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& item : SplitList(s)) out.push_back(Rat::Parse(item));
  return out;
}

bool ParseBool(const std::string& s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw std::invalid_argument("expected true or false, got '" + s + "'");
}

std::vector<PadicSample> ParsePadic(const std::string& s) {
  std::vector<PadicSample> out;
  for (const auto& item : SplitList(s)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("p-adic context must be p:q, got '" + item +
                                  "'");
    }
    out.push_back(PadicSample{ParseInt(Trim(item.substr(0, colon))),
                              Rat::Parse(Trim(item.substr(colon + 1)))});
  }
  return out;
}

using Setter = std::function<void(GridSpec&, const std::string&)>;

const std::map<std::string, Setter>& Setters() {
  static const std::map<std::string, Setter> setters = {
      {"n", [](GridSpec& g, const std::string& v) { g.n = ParseRange(v); }},
      {"k", [](GridSpec& g, const std::string& v) { g.k = ParseRange(v); }},
      {"x", [](GridSpec& g, const std::string& v) { g.x = ParseRange(v); }},
      {"alpha",
       [](GridSpec& g, const std::string& v) { g.alpha = ParseRange(v); }},
      {"beta", [](GridSpec& g, const std::string& v) { g.beta = ParseRange(v); }},
      {"degree",
       [](GridSpec& g, const std::string& v) { g.degree = ParseRange(v); }},
      {"factors",
       [](GridSpec& g, const std::string& v) { g.max_factors = ParseInt(v); }},
      {"q", [](GridSpec& g, const std::string& v) { g.q = ParseRatList(v); }},
      {"equal_weights",
       [](GridSpec& g, const std::string& v) { g.equal_weights = ParseBool(v); }},
      {"series_n",
       [](GridSpec& g, const std::string& v) { g.series_n = ParseRange(v); }},
      {"series_x",
       [](GridSpec& g, const std::string& v) { g.series_x = ParseRange(v); }},
      {"series_q",
       [](GridSpec& g, const std::string& v) { g.series_q = ParseRatList(v); }},
      {"series_tol",
       [](GridSpec& g, const std::string& v) { g.series_tol = ParseDouble(v); }},
      {"series_slack",
       [](GridSpec& g, const std::string& v) {
         g.series_slack = ParseDouble(v);
       }},
      {"padic",
       [](GridSpec& g, const std::string& v) { g.padic = ParsePadic(v); }},
      {"padic_alpha",
       [](GridSpec& g, const std::string& v) { g.padic_alpha = ParseRange(v); }},
      {"padic_beta",
       [](GridSpec& g, const std::string& v) { g.padic_beta = ParseRange(v); }},
      {"padic_levels",
       [](GridSpec& g, const std::string& v) { g.padic_levels = ParseInt(v); }},
  };
  return setters;
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error("config line " + std::to_string(line) + ": " +
                         message),
      line_(line) {}

GridSpec ParseConfig(const std::string& text) {
  GridSpec grid = GridSpec::Default();
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    const auto it = Setters().find(key);
    if (it == Setters().end()) {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(line_no, "duplicate key '" + key + "'");
    }
    if (value.empty()) throw ConfigError(line_no, "missing value for " + key);
    try {
      it->second(grid, value);
      grid.Validate();
    } catch (const std::exception& e) {
      throw ConfigError(line_no, key + ": " + e.what());
    }
  }
  return grid;
}

GridSpec LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

}  // namespace qgen
