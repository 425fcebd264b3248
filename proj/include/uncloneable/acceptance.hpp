// Copyright 2026 The Uncloneable Authors
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

#include <string>
#include <vector>

namespace uncloneable {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

/// Runs the nine end-to-end checks. `fast` trims Monte Carlo trial counts
/// and restarts for a quick smoke run; the full run uses the documented
/// sizes.
std::vector<CriterionResult> run_acceptance(bool fast);

/// "PASS [3] name (1.2 s): detail" style line.
std::string format_result(const CriterionResult& r);

}  // namespace uncloneable
