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

#include <cstdlib>
#include <iostream>

#include "szx/acceptance.hpp"

int main() {
  szx::SuiteOptions options;
  if (const char* seed = std::getenv("SZX_SEED")) options.seed = std::strtoull(seed, nullptr, 10);
  const szx::SuiteReport report = szx::run_suite(options);
  for (const szx::CriterionResult& r : report.criteria) std::cout << szx::format_result(r, true) << "\n";
  std::cout << (report.passed() ? "acceptance: all criteria pass" : "acceptance: FAILED") << "\n";
  return report.passed() ? 0 : 1;
}
