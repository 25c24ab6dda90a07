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

#ifndef QGENOCCHI_EMIT_H_
#define QGENOCCHI_EMIT_H_

#include <string>

#include "qgenocchi/verify.h"

namespace qgen {

enum class ReportFormat { kJson, kCsv, kMarkdown };

// Throws std::invalid_argument for names other than json, csv, markdown.
ReportFormat ParseReportFormat(const std::string& name);

// Byte-stable rendering: fixed key order, canonical "a/b" rationals.
// Throws std::invalid_argument when there are no reports.
std::string RenderReports(const RunResult& result, ReportFormat format);

// Writes to `path`, or stdout when path is empty or "-". Throws
// std::runtime_error when the destination cannot be written.
void EmitReports(const RunResult& result, ReportFormat format,
                 const std::string& path);

}  // namespace qgen

#endif  // QGENOCCHI_EMIT_H_
