// Copyright 2026 The szx Authors
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

// The acceptance suite: twelve criteria, each a batch of exact or seeded
// randomized checks. Output is deterministic for a fixed seed; wall-clock
// timings are reported separately and only on request.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace szx {

inline constexpr std::uint64_t kDefaultSeed = 20260214;

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string tags;  // space-separated filter keywords
  bool passed = false;
  long cases = 0;
  long failures = 0;
  double worst = 0;      // largest error seen
  double tolerance = 0;  // bound on `worst`
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Comma-separated terms; a criterion runs when a term equals its number or
  /// occurs (case-insensitively) in its name or tags. Empty runs everything.
  std::string filter;
  /// 1 runs criteria sequentially; otherwise they run concurrently.
  int jobs = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  double seconds = 0;

  /// True when at least one criterion ran and all of them passed.
  bool passed() const;
};

struct CriterionInfo {
  int id;
  std::string name;
  std::string tags;
};
const std::vector<CriterionInfo>& acceptance_criteria();
bool criterion_selected(const CriterionInfo& c, const std::string& filter);

SuiteReport run_suite(const SuiteOptions& options = {});

/// "criterion 7 PASS bv outcome is the secret: 62 cases, worst 2.2e-16 (tol 1e-09)".
std::string format_result(const CriterionResult& r, bool timings = false);
nlohmann::ordered_json suite_to_json(const SuiteReport& r, bool timings = false);

}  // namespace szx
