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

#ifndef QGENOCCHI_CONFIG_H_
#define QGENOCCHI_CONFIG_H_

// Flat key=value grid configuration:
//
//   # comment
//   n = 0..8
//   q = 2, 3, 1/2, 2/3, -2, 5/3
//   padic = 3:4, 3:7, 5:6
//
// Keys not present keep their GridSpec::Default() value.

#include <stdexcept>
#include <string>

#include "qgenocchi/verify.h"

namespace qgen {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

GridSpec ParseConfig(const std::string& text);
GridSpec LoadConfigFile(const std::string& path);

}  // namespace qgen

#endif  // QGENOCCHI_CONFIG_H_
