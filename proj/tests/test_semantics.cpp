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

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "szx/scalable.hpp"
#include "szx/semantics.hpp"

namespace szx {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Semantics, GateTable) {
  for (const char* name : {"H", "Not", "Z", "Swap", "CNot", "CZ", "Toffoli"}) {
    const CMatrix v = interp_pure(build_gate(name)).resolved();
    EXPECT_LT(max_abs_difference(v, oracle::gate_table(name)), 1e-12) << name;
  }
}

TEST(Semantics, StateTable) {
  for (const char* name : {"0", "1", "+", "-"}) {
    EXPECT_LT(max_abs_difference(density_matrix(build_state(name)), oracle::state_density(name)), 1e-12) << name;
  }
}

TEST(Semantics, StarScalar) {
  const Diagram star = from_generator(Generator::star());
  EXPECT_NEAR(interp_cpm(star).resolved()(0, 0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(interp_cpm(tensor(star, star)).resolved()(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(interp_pure(empty_diagram()).resolved()(0, 0).real(), 1.0, 1e-15);
}

TEST(Semantics, EmptyGreenSpider) {
  const CMatrix v = interp_pure(from_generator(Generator::green(1, 0, 0))).resolved();
  EXPECT_NEAR(std::abs(v(0, 0) - std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(Semantics, MixIsUnnormalizedIdentity) {
  const CMatrix rho = density_matrix(from_generator(Generator::mix(1)));
  EXPECT_LT(max_abs_difference(rho, CMatrix::Identity(2, 2)), 1e-15);
}

TEST(Semantics, DiscardingANormalizedState) {
  const Diagram d = compose(build_state("0"), from_generator(Generator::discard(1)));
  EXPECT_NEAR(std::abs(interp_cpm(d).resolved()(0, 0) - 1.0), 0.0, 1e-12);
}

TEST(Semantics, PureRejectsDiscard) {
  try {
    interp_pure(from_generator(Generator::discard(2)));
    FAIL();
  } catch (const SzxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPure);
  }
}

TEST(Semantics, EqualityChecksBoundarySizes) {
  try {
    equal_semantics(identity(TypeList{2}), identity(TypeList{1}));
    FAIL();
  } catch (const SzxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TypeMismatch);
  }
  EXPECT_FALSE(equal_semantics(build_state("0"), build_state("1")));
  EXPECT_TRUE(equal_semantics(compose(divider(2), gatherer(2)), identity(TypeList{3})));
}

TEST(Semantics, GlobalPhaseIsInvisible) {
  const Diagram z = build_gate("Z");
  const Diagram phased = tensor(z, from_generator(Generator::hbox(1, 0, 0, {std::polar(1.0, 0.7)})));
  EXPECT_TRUE(equal_semantics(z, phased));
}

TEST(Semantics, RedSpiderMatchesFormula) {
  // Red spider as H-conjugated green spider with the same phase.
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      const Diagram red = from_generator(Generator::red(2, n, m, {0.3, kPi}));
      EXPECT_LT(max_abs_difference(interp_pure(red).resolved(), oracle::brute_force_pure(red)), 1e-12);
    }
}

TEST(SemanticsProperty, InterpreterAgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Diagram d = oracle::random_diagram(rng, 6);
    CMatrix expected;
    try {
      expected = oracle::brute_force_pure(d);
    } catch (const std::runtime_error&) {
      continue;
    }
    ++checked;
    ASSERT_LT(max_abs_difference(interp_pure(d).resolved(), expected), 1e-9) << trial;
  }
  EXPECT_GT(checked, 200);
}

TEST(SemanticsProperty, CpmAgreesWithBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d = oracle::random_diagram(rng, 4, true);
    CMatrix expected;
    try {
      expected = oracle::brute_force_cpm(d);
    } catch (const std::runtime_error&) {
      continue;
    }
    ASSERT_LT(max_abs_difference(interp_cpm(d).resolved(), expected), 1e-9) << trial;
  }
}

TEST(SemanticsProperty, DoublingOfPureDiagrams) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d = oracle::random_diagram(rng, 5);
    const CMatrix v = interp_pure(d).resolved();
    ASSERT_LT(max_abs_difference(interp_cpm(d).resolved(), oracle::doubled(v)), 1e-9);
  }
}

TEST(SemanticsProperty, IsometryThenDiscardIsDiscard) {
  std::mt19937_64 rng(14);
  const char* gates[] = {"H", "Not", "Z", "CNot", "CZ", "Swap"};
  for (int trial = 0; trial < 30; ++trial) {
    Diagram u = identity(TypeList{1, 1});
    for (int g = 0; g < 4; ++g) {
      const std::string name = gates[std::uniform_int_distribution<int>(0, 5)(rng)];
      Diagram gate = build_gate(name);
      if (gate.inputs().length() == 1) gate = tensor(gate, identity(TypeList{1}));
      u = compose(u, gate);
    }
    const Diagram discard2 = tensor(from_generator(Generator::discard(1)), from_generator(Generator::discard(1)));
    EXPECT_TRUE(equal_semantics(compose(u, discard2), discard2));
  }
}

}  // namespace
}  // namespace szx
