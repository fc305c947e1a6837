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

#include <random>

#include "oracle.hpp"
#include "szx/diagram.hpp"
#include "szx/match.hpp"
#include "szx/semantics.hpp"

namespace szx {
namespace {

TEST(Diagram, ConnectChecksWidths) {
  Diagram d(TypeList{2}, TypeList{3});
  EXPECT_THROW(d.connect(Endpoint::input(0), Endpoint::output(0)), SzxError);
  Diagram e(TypeList{2}, TypeList{2});
  e.connect(Endpoint::input(0), Endpoint::output(0));
  EXPECT_TRUE(validate(e).empty());
}

TEST(Diagram, ValidateReportsDanglingPorts) {
  Diagram d(TypeList{1}, TypeList{1});
  const NodeId g = d.add_node(Generator::green(1, 1, 1));
  d.connect(Endpoint::input(0), Endpoint::in_port(g, 0));
  const auto v = validate(d);
  ASSERT_EQ(v.size(), 2U);
  EXPECT_EQ(v[0].kind, Violation::DanglingPort);
}

TEST(Diagram, ComposeTypeMismatch) {
  try {
    compose(identity(TypeList{1}), identity(TypeList{2}));
    FAIL();
  } catch (const SzxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TypeMismatch);
  }
}

TEST(Diagram, IdentityLaws) {
  const Diagram cnot = build_gate("CNot");
  EXPECT_TRUE(compose(identity(cnot.inputs()), cnot) == cnot);
  EXPECT_TRUE(isomorphic(compose(cnot, identity(cnot.outputs())), cnot));
  EXPECT_TRUE(isomorphic(tensor(empty_diagram(), cnot), cnot));
}

TEST(Diagram, TensorInterchange) {
  const Diagram h = build_gate("H");
  const Diagram z = build_gate("Z");
  const Diagram lhs = compose(tensor(h, z), tensor(z, h));
  const Diagram rhs = tensor(compose(h, z), compose(z, h));
  EXPECT_TRUE(isomorphic(lhs, rhs));
  EXPECT_TRUE(equal_semantics(lhs, rhs));
}

TEST(Diagram, SnakeBecomesAnEdge) {
  // (cup (x) id) ; (id (x) cap) = id, and the composite has no loop.
  const Diagram snake = compose(tensor(cup(2), identity(TypeList{2})), tensor(identity(TypeList{2}), cap(2)));
  EXPECT_TRUE(equal_semantics(snake, identity(TypeList{2})));
}

TEST(Diagram, ClosedLoopKeepsItsScalar) {
  // cup ; cap of width 2 is the scalar 4.
  const Diagram loop = compose(cup(2), cap(2));
  EXPECT_NEAR(std::abs(interp_pure(loop).resolved()(0, 0) - 4.0), 0.0, 1e-12);
  const Diagram glued = compose(cup(1), swap(TypeList{1}, TypeList{1}));
  const Diagram ring = compose(glued, cap(1));
  EXPECT_NEAR(std::abs(interp_pure(ring).resolved()(0, 0) - 2.0), 0.0, 1e-12);
  // A loop made of boundary wires only.
  const Diagram pure_loop = compose(compose(cup(3), identity(TypeList{3, 3})), cap(3));
  EXPECT_NEAR(std::abs(interp_pure(pure_loop).resolved()(0, 0) - 8.0), 0.0, 1e-12);
}

TEST(Diagram, PermutationMatchesIndexMap) {
  const TypeList t{1, 2, 1};
  const Diagram p = permutation(t, {2, 0, 1});
  EXPECT_EQ(p.outputs(), (TypeList{2, 1, 1}));
  const CMatrix v = interp_pure(p).resolved();
  // Input bits a, b1 b2, c -> outputs (b1 b2), c, a.
  for (Word x = 0; x < 16; ++x) {
    const Word a = (x >> 3) & 1;
    const Word b = (x >> 1) & 3;
    const Word c = x & 1;
    const Word y = (b << 2) | (c << 1) | a;
    EXPECT_NEAR(std::abs(v(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) - 1.0), 0.0, 1e-12);
  }
}

TEST(Diagram, SwapIsInvolutive) {
  const TypeList a{1, 2};
  const TypeList b{3};
  EXPECT_TRUE(equal_semantics(compose(swap(a, b), swap(b, a)), identity(a.concat(b))));
}

TEST(DiagramProperty, TransposeAndAdjoint) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d = oracle::random_diagram(rng, 5);
    const CMatrix v = interp_pure(d).resolved();
    ASSERT_LT(max_abs_difference(interp_pure(transpose(d)).resolved(), v.transpose()), 1e-9);
    ASSERT_LT(max_abs_difference(interp_pure(adjoint(d)).resolved(), v.adjoint()), 1e-9);
    EXPECT_TRUE(validate(transpose(d)).empty());
  }
}

TEST(DiagramProperty, CompositionIsMatrixProduct) {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 60; ++trial) {
    const Diagram f = oracle::random_diagram(rng, 3);
    const Diagram g = oracle::random_diagram(rng, 3);
    if (f.outputs() != g.inputs()) continue;
    ++checked;
    const CMatrix expected = interp_pure(g).resolved() * interp_pure(f).resolved();
    ASSERT_LT(max_abs_difference(interp_pure(compose(f, g)).resolved(), expected), 1e-9);
  }
  EXPECT_GT(checked, 10);
}

TEST(DiagramProperty, TensorIsKronecker) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Diagram f = oracle::random_diagram(rng, 2);
    const Diagram g = oracle::random_diagram(rng, 2);
    const CMatrix expected = oracle::kron(interp_pure(f).resolved(), interp_pure(g).resolved());
    ASSERT_LT(max_abs_difference(interp_pure(tensor(f, g)).resolved(), expected), 1e-9);
  }
}

TEST(Isomorphism, IgnoresIdsAndArachnidLegOrder) {
  Diagram a(TypeList{1, 1}, TypeList{1});
  const NodeId g = a.add_node(Generator::green(1, 2, 1, {0.5}));
  a.connect(Endpoint::input(0), Endpoint::in_port(g, 0));
  a.connect(Endpoint::input(1), Endpoint::in_port(g, 1));
  a.connect(Endpoint::out_port(g, 0), Endpoint::output(0));

  Diagram b(TypeList{1, 1}, TypeList{1});
  b.add_node(7, Generator::green(1, 2, 1, {0.5}));
  b.connect(Endpoint::input(0), Endpoint::in_port(7, 1));
  b.connect(Endpoint::input(1), Endpoint::in_port(7, 0));
  b.connect(Endpoint::out_port(7, 0), Endpoint::output(0));
  EXPECT_TRUE(isomorphic(a, b));

  Diagram c = b;
  c.remove_node(7);
  c.add_node(7, Generator::green(1, 2, 1, {0.25}));
  c.connect(Endpoint::input(0), Endpoint::in_port(7, 1));
  c.connect(Endpoint::input(1), Endpoint::in_port(7, 0));
  c.connect(Endpoint::out_port(7, 0), Endpoint::output(0));
  EXPECT_FALSE(isomorphic(a, c));
}

TEST(Isomorphism, OrderedPortsStayOrdered) {
  const Diagram s = from_generator(Generator::swap(1, 1));
  Diagram t(TypeList{1, 1}, TypeList{1, 1});
  const NodeId n = t.add_node(Generator::swap(1, 1));
  t.connect(Endpoint::input(0), Endpoint::in_port(n, 1));
  t.connect(Endpoint::input(1), Endpoint::in_port(n, 0));
  t.connect(Endpoint::out_port(n, 0), Endpoint::output(0));
  t.connect(Endpoint::out_port(n, 1), Endpoint::output(1));
  EXPECT_FALSE(isomorphic(s, t));
  EXPECT_TRUE(isomorphic(s, s));
}

TEST(Embedding, FindsExternals) {
  const Diagram cnot = build_gate("CNot");
  Diagram pattern(TypeList{1}, TypeList{1, 1});
  const NodeId g = pattern.add_node(Generator::green(1, 1, 2));
  pattern.connect(Endpoint::input(0), Endpoint::in_port(g, 0));
  pattern.connect(Endpoint::out_port(g, 0), Endpoint::output(0));
  pattern.connect(Endpoint::out_port(g, 1), Endpoint::output(1));
  // Node 0 of the CNot diagram is the green copy.
  const auto e = embed(pattern, cnot, {{g, 0}});
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->externals[0], Endpoint::input(0));
  EXPECT_FALSE(embed(pattern, cnot, {{g, 1}}).has_value());
}

}  // namespace
}  // namespace szx
