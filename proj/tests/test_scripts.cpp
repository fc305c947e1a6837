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

#include <gtest/gtest.h>

#include "szx/oracles.hpp"
#include "szx/scalable.hpp"
#include "szx/scripts.hpp"

namespace szx {
namespace {

void expect_passes(const ProofScript& script) {
  const ProofReport r = check_proof(script);
  for (const StepReport& s : r.steps)
    EXPECT_EQ(s.status, StepStatus::Passed) << script.name << " step " << s.index << " " << s.rule << ": " << s.message;
  EXPECT_TRUE(r.end_structural) << script.name;
  EXPECT_TRUE(r.end_semantic) << script.name;
  EXPECT_TRUE(r.passed()) << script.name;
}

TEST(Scripts, OracleInvolution) {
  expect_passes(oracle_involution_script(BooleanFunction(2, 1, {0, 1, 1, 1})));
  expect_passes(oracle_involution_script(BooleanFunction(1, 2, {2, 3})));
}

TEST(Scripts, DiagonalOracle) {
  expect_passes(diagonal_oracle_script(BooleanFunction(2, 1, {0, 1, 1, 1})));
  expect_passes(diagonal_oracle_script(BooleanFunction(1, 1, {1, 0})));
}

TEST(Scripts, FunctionFromOracle) {
  expect_passes(function_from_oracle_script(BooleanFunction(2, 1, {0, 1, 1, 1})));
  expect_passes(function_from_oracle_script(BooleanFunction(1, 2, {2, 1})));
}

TEST(Scripts, BernsteinVazirani) {
  for (int n = 1; n <= 3; ++n)
    for (Word s = 0; s < (Word{1} << n); ++s) expect_passes(bv_script(n, s));
}

TEST(Scripts, IterateBase) {
  expect_passes(iterate_base_script(from_generator(Generator::green(2, 1, 1, {0.5, 1.0}))));
  expect_passes(iterate_base_script(function_arrow(BooleanFunction(2, 2, {1, 3, 0, 2}))));
}

TEST(Scripts, IterateStep) {
  const Diagram rot = from_generator(Generator::red(1, 1, 1, {0.7}));
  const Diagram wide = from_generator(Generator::green(2, 1, 1, {0.5, 1.0}));
  const Diagram box = from_generator(Generator::hbox(1, 1, 1, {cd{0.3, -1.2}}));
  for (int k = 1; k <= 3; ++k) {
    expect_passes(iterate_step_script(rot, k));
    expect_passes(iterate_step_script(box, k));
  }
  expect_passes(iterate_step_script(wide, 2));
}

TEST(Scripts, BundledScriptsPass) {
  const auto bundle = bundled_scripts();
  EXPECT_GE(bundle.size(), 6u);
  for (const BundledScript& b : bundle) expect_passes(b.script);
}

TEST(Scripts, MissingAxiomIsReported) {
  ProofScript s = bv_script(2, 0b10);
  s.oracle_axioms.clear();
  const ProofReport r = check_proof(s);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.steps.at(0).status, StepStatus::AxiomNotAdmitted);
}

TEST(Scripts, CorruptedStepIsIdentified) {
  ProofScript s = oracle_involution_script(BooleanFunction(1, 1, {1, 0}));
  // Point the arrow-copy step at the wrong nodes.
  s.steps.at(2).anchor.nodes[1] = 2;
  const ProofReport r = check_proof(s);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.steps.at(2).status, StepStatus::AnchorMismatch);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(r.steps[i].status, StepStatus::Passed);
}

TEST(Scripts, WrongEndIsRejected) {
  ProofScript s = function_from_oracle_script(BooleanFunction(1, 1, {1, 0}));
  s.end = function_arrow(BooleanFunction(1, 1, {0, 1}));
  const ProofReport r = check_proof(s);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.end_semantic);
}

TEST(Scripts, WrongPhaseIsSemanticMismatch) {
  ProofScript s = bv_script(2, 0b11);
  // Claim the kickback produced a different phase.
  for (ProofStep& step : s.steps)
    if (step.rule == "red.phase") step.params.x = 0;
  const ProofReport r = check_proof(s);
  EXPECT_FALSE(r.passed());
}

TEST(Scripts, StepScriptPreconditions) {
  EXPECT_THROW(iterate_step_script(from_generator(Generator::red(1, 1, 1)), 0), SzxError);
  EXPECT_THROW(iterate_step_script(function_arrow(BooleanFunction::identity(1)), 1), SzxError);
}

}  // namespace
}  // namespace szx
