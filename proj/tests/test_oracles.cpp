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

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "szx/oracles.hpp"
#include "szx/scalable.hpp"

namespace szx {
namespace {

BooleanFunction and2() { return BooleanFunction(2, 1, {0, 0, 0, 1}); }

TEST(Oracles, FunctionArrowMatrix) {
  const BooleanFunction xor2(2, 1, {0, 1, 1, 0});
  EXPECT_LT(max_abs_difference(interp_pure(function_arrow(xor2)).resolved(), oracle::function_matrix(xor2)), 1e-12);
  const CMatrix id = interp_pure(function_arrow(BooleanFunction::identity(2))).resolved();
  EXPECT_LT(max_abs_difference(id, CMatrix::Identity(4, 4)), 1e-12);
}

TEST(Oracles, PromisePredicates) {
  EXPECT_TRUE(is_balanced(BooleanFunction::identity(2)));
  EXPECT_TRUE(is_injective(BooleanFunction::identity(2)));
  EXPECT_FALSE(is_balanced(BooleanFunction::constant(2, 1, 1)));
  EXPECT_FALSE(is_balanced(and2()));
  // 3 -> 2 bits cannot be balanced... unless preimages are equal: 8 / 4 = 2.
  EXPECT_TRUE(is_balanced(BooleanFunction(3, 2, {0, 1, 2, 3, 0, 1, 2, 3})));
  EXPECT_FALSE(is_balanced(BooleanFunction(1, 2, {0, 1})));
}

TEST(Oracles, GraphicalPromiseExamples) {
  EXPECT_TRUE(graphical_promise_holds(BooleanFunction::identity(2), Promise::Balanced));
  EXPECT_TRUE(graphical_promise_holds(BooleanFunction::identity(2), Promise::Injective));
  const BooleanFunction s_dot(3, 1, {0, 1, 0, 1, 1, 0, 1, 0});  // s = 101
  EXPECT_TRUE(graphical_promise_holds(s_dot, Promise::Balanced));
  EXPECT_FALSE(graphical_promise_holds(and2(), Promise::Balanced));
}

TEST(OraclesProperty, GraphicalPromiseAgreesWithTables) {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m) {
      const std::size_t count = std::size_t{1} << (m << n);
      const bool full = count <= 256;
      for (std::size_t t = 0; t < (full ? count : 500); ++t) {
        BooleanFunction f = oracle::random_function(rng, n, m);
        if (full) {
          std::vector<Word> table(std::size_t{1} << n);
          for (std::size_t x = 0; x < table.size(); ++x) table[x] = (t >> (m * x)) & ((Word{1} << m) - 1);
          f = BooleanFunction(n, m, table);
        }
        ASSERT_EQ(graphical_promise_holds(f, Promise::Balanced), is_balanced(f));
        ASSERT_EQ(graphical_promise_holds(f, Promise::Injective), is_injective(f));
      }
    }
}

TEST(Oracles, RedArrowIsInnerProduct) {
  const F2Matrix s = F2Matrix::from_strings({"101"});
  for (Word x = 0; x < 8; ++x) {
    const Diagram d = compose(basis_state_wide(x, 3), red_matrix_arrow(s));
    const Word expected = static_cast<Word>(parity(x & 0b101));
    // Up to the arrow scalar 2^(-1/2), the output is |s.x>.
    const CMatrix v = interp_pure(d).resolved();
    EXPECT_NEAR(std::abs(v(static_cast<Eigen::Index>(expected), 0)), std::exp2(-0.5), 1e-12);
    EXPECT_NEAR(std::abs(v(static_cast<Eigen::Index>(1 - expected), 0)), 0.0, 1e-12);
  }
  EXPECT_TRUE(equal_semantics(red_matrix_arrow(F2Matrix::identity(3)), identity(TypeList{3})));
}

TEST(Oracles, YellowOnesIsAnd) {
  const Diagram y = yellow_matrix_arrow(BoolMatrix::ones(1, 3));
  const BooleanFunction and3(3, 1, {0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_LT(max_abs_difference(interp_pure(y).resolved(), oracle::function_matrix(and3)), 1e-12);
}

TEST(Oracles, QuantumOracleTables) {
  const Diagram u_and = quantum_oracle(and2());
  EXPECT_LT(max_abs_difference(interp_pure(u_and).resolved(), oracle::gate_table("Toffoli")), 1e-12);
  EXPECT_TRUE(equal_semantics(u_and, build_gate("Toffoli")));
  const Diagram u_id = quantum_oracle(BooleanFunction::identity(1));
  EXPECT_LT(max_abs_difference(interp_pure(u_id).resolved(), oracle::gate_table("CNot")), 1e-12);
}

TEST(OraclesProperty, QuantumOracleIsUnitaryInvolution) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    const BooleanFunction f = oracle::random_function(rng, n, m);
    const Diagram u = quantum_oracle(f);
    const CMatrix v = interp_pure(u).resolved();
    const Eigen::Index dim = v.rows();
    ASSERT_LT(max_abs_difference(v * v.adjoint(), CMatrix::Identity(dim, dim)), 1e-9);
    ASSERT_TRUE(equal_semantics(compose(u, u), identity(TypeList{n, m})));
    // |x>|y> -> |x>|f(x) xor y>
    for (Word x = 0; x < (Word{1} << n); ++x)
      for (Word y = 0; y < (Word{1} << m); ++y)
        ASSERT_NEAR(std::abs(v(static_cast<Eigen::Index>((x << m) | (f(x) ^ y)), static_cast<Eigen::Index>((x << m) | y)) - 1.0), 0.0, 1e-12);
  }
}

TEST(Oracles, DiagonalOracle) {
  EXPECT_TRUE(equal_semantics(diagonal_oracle(BooleanFunction::constant(2, 1, 0)), identity(TypeList{2})));
  EXPECT_LT(max_abs_difference(interp_pure(diagonal_oracle(BooleanFunction::identity(1))).resolved(), oracle::gate_table("Z")), 1e-12);
  const CMatrix p = interp_pure(diagonal_oracle(BooleanFunction::point(2, 2))).resolved();
  CMatrix expected = CMatrix::Identity(4, 4);
  expected(2, 2) = -1;
  EXPECT_LT(max_abs_difference(p, expected), 1e-12);
  try {
    diagonal_oracle(BooleanFunction::identity(2));
    FAIL();
  } catch (const SzxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBoolean);
  }
}

TEST(OraclesProperty, Reconstructions) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const int m = std::uniform_int_distribution<int>(1, 2)(rng);
    const BooleanFunction f = oracle::random_function(rng, n, m);
    const Diagram u = quantum_oracle(f);
    const Diagram back = function_from_oracle(u, n, m);
    ASSERT_LT(max_abs_difference(interp_pure(back).resolved(), oracle::function_matrix(f)), 1e-9);
    if (m == 1) {
      ASSERT_LT(max_abs_difference(interp_pure(diagonal_from_oracle(u, n)).resolved(),
                                   interp_pure(diagonal_oracle(f)).resolved()),
                1e-9);
    }
  }
}

TEST(Oracles, LinearMatrix) {
  const BooleanFunction s_dot(3, 1, {0, 1, 0, 1, 1, 0, 1, 0});
  const auto a = linear_matrix(s_dot);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->to_strings(), (std::vector<std::string>{"101"}));
  EXPECT_FALSE(linear_matrix(and2()).has_value());
}

TEST(Oracles, MetaRuleExamples) {
  // Copy rule: C = D = I, A = B = I: Im(I;I) is the diagonal = Ker(I I).
  const F2Matrix i1 = F2Matrix::identity(1);
  EXPECT_TRUE(meta_rule_condition(i1, i1, i1, i1).holds);
  const F2Matrix z = F2Matrix(1, 1);
  const MetaCondition zero = meta_rule_condition(z, z, z, z);
  // Im(0) = {0} but Ker(0 0) is everything.
  EXPECT_FALSE(zero.holds);
  EXPECT_EQ(zero.k, 1);
  EXPECT_EQ(zero.h, 1);
  EXPECT_THROW(meta_rule_condition(F2Matrix(1, 2), i1, i1, i1), SzxError);
  const auto [lhs, rhs] = meta_rule_sides(i1, i1, i1, i1);
  EXPECT_TRUE(equal_semantics(lhs, rhs));
}

TEST(OraclesProperty, MetaRuleMatchesBruteForceSpans) {
  std::mt19937_64 rng(44);
  auto random_matrix = [&](int r, int c) {
    F2Matrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.set(i, j, static_cast<int>(rng() & 1));
    return a;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const int n1 = 1 + static_cast<int>(rng() % 2);
    const int n2 = 1 + static_cast<int>(rng() % 2);
    const int p = 1 + static_cast<int>(rng() % 2);
    const int r = 1 + static_cast<int>(rng() % 2);
    const F2Matrix a = random_matrix(r, n1), b = random_matrix(r, n2), c = random_matrix(n1, p), d = random_matrix(n2, p);
    // Brute-force image and kernel as sets.
    std::vector<bool> im(std::size_t{1} << (n1 + n2), false), ker(std::size_t{1} << (n1 + n2), false);
    for (Word z = 0; z < (Word{1} << p); ++z) im[(c.apply(z) << n2) | d.apply(z)] = true;
    for (Word v = 0; v < (Word{1} << (n1 + n2)); ++v) ker[v] = (a.apply(v >> n2) ^ b.apply(v & ((Word{1} << n2) - 1))) == 0;
    const bool expected = im == ker;
    ASSERT_EQ(meta_rule_condition(a, b, c, d).holds, expected);
    const auto [lhs, rhs] = meta_rule_sides(a, b, c, d);
    ASSERT_EQ(equal_semantics(lhs, rhs), expected) << trial;
  }
}

}  // namespace
}  // namespace szx
