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

#ifndef QGENOCCHI_PARALLEL_H_
#define QGENOCCHI_PARALLEL_H_

namespace qgen {

// kSerial is the reference path; kParallel must produce identical results.
enum class Execution { kSerial, kParallel };

int MaxThreads();

}  // namespace qgen

#endif  // QGENOCCHI_PARALLEL_H_
