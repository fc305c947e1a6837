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

#include "szx/oracles.hpp"

#include <algorithm>
#include <numbers>

#include "szx/scalable.hpp"

namespace szx {

namespace {
constexpr double kPi = std::numbers::pi;
}

Diagram function_arrow(const BooleanFunction& f) { return from_generator(Generator::function_arrow(f)); }
Diagram red_matrix_arrow(const F2Matrix& a) { return from_generator(Generator::red_arrow(a)); }
Diagram yellow_matrix_arrow(const BoolMatrix& a) { return from_generator(Generator::yellow_arrow(a)); }

Diagram green_erase(int n) { return from_generator(Generator::green(n, 1, 0)); }
Diagram green_unit(int n) { return from_generator(Generator::green(n, 0, 1)); }
Diagram green_copy(int n) { return from_generator(Generator::green(n, 1, 2)); }
Diagram green_merge(int n) { return from_generator(Generator::green(n, 2, 1)); }
Diagram red_xor(int n) { return from_generator(Generator::red(n, 2, 1)); }

namespace {

std::vector<std::size_t> preimage_sizes(const BooleanFunction& f) {
  std::vector<std::size_t> count(std::size_t{1} << f.m(), 0);
  for (Word x = 0; x < (Word{1} << f.n()); ++x) ++count[f(x)];
  return count;
}

}  // namespace

bool is_balanced(const BooleanFunction& f) {
  const auto c = preimage_sizes(f);
  return std::all_of(c.begin(), c.end(), [&](std::size_t v) { return v == c.front(); });
}

bool is_injective(const BooleanFunction& f) {
  const auto c = preimage_sizes(f);
  return std::all_of(c.begin(), c.end(), [](std::size_t v) { return v <= 1; });
}

bool is_constant(const BooleanFunction& f) {
  for (Word x = 0; x < (Word{1} << f.n()); ++x)
    if (f(x) != f(0)) return false;
  return true;
}

std::optional<F2Matrix> linear_matrix(const BooleanFunction& f) {
  if (f(0) != 0) return std::nullopt;
  F2Matrix a(f.m(), f.n());
  for (int j = 0; j < f.n(); ++j) {
    const Word col = f(Word{1} << (f.n() - 1 - j));
    for (int i = 0; i < f.m(); ++i) a.set(i, j, word_bit(col, i, f.m()));
  }
  for (Word x = 0; x < (Word{1} << f.n()); ++x)
    if (a.apply(x) != f(x)) return std::nullopt;
  return a;
}

std::pair<Diagram, Diagram> promise_diagrams(const BooleanFunction& f, Promise which) {
  const int n = f.n();
  const int m = f.m();
  const Diagram arrow = function_arrow(f);
  if (which == Promise::Balanced) {
    return {compose(green_unit(n), arrow), tensor(green_unit(m), scalar_diagram(2 * (n - m)))};
  }
  return {compose(green_merge(n), arrow),
          tensor(compose(tensor(arrow, arrow), green_merge(m)), scalar_diagram(2 * (n - m)))};
}

bool graphical_promise_holds(const BooleanFunction& f, Promise which, const Tolerance& tol) {
  const auto [lhs, rhs] = promise_diagrams(f, which);
  return equal_semantics(lhs, rhs, tol);
}

MetaCondition meta_rule_condition(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d) {
  if (c.cols() != d.cols() || a.rows() != b.rows() || a.cols() != c.rows() || b.cols() != d.rows())
    throw SzxError(ErrorCode::ShapeMismatch, "meta rule needs C: n1 x p, D: n2 x p, A: r x n1, B: r x n2");
  const F2Matrix cd = F2Matrix::vstack(c, d);
  const F2Matrix ab = F2Matrix::hstack(a, b);
  MetaCondition out;
  out.holds = f2_same_span(f2_image(cd), f2_kernel(ab), cd.rows());
  out.k = cd.cols() - f2_rank(cd);
  out.h = ab.rows() - f2_rank(ab);
  return out;
}

std::pair<Diagram, Diagram> meta_rule_sides(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d) {
  const MetaCondition cond = meta_rule_condition(a, b, c, d);
  const int p = c.cols();
  const int n1 = c.rows();
  const int n2 = d.rows();
  const int r = a.rows();
  const Diagram lhs = compose(from_generator(Generator::green(p, 0, 2)), tensor(red_matrix_arrow(c), red_matrix_arrow(d)));

  Diagram rhs(TypeList{}, TypeList{n1, n2});
  const NodeId g1 = rhs.add_node(Generator::green(n1, 0, 2));
  const NodeId g2 = rhs.add_node(Generator::green(n2, 0, 2));
  const NodeId av = rhs.add_node(Generator::red_arrow(a));
  const NodeId bv = rhs.add_node(Generator::red_arrow(b));
  const NodeId x = rhs.add_node(Generator::red(r, 2, 0));
  rhs.connect(Endpoint::out_port(g1, 0), Endpoint::output(0));
  rhs.connect(Endpoint::out_port(g2, 0), Endpoint::output(1));
  rhs.connect(Endpoint::out_port(g1, 1), Endpoint::in_port(av, 0));
  rhs.connect(Endpoint::out_port(g2, 1), Endpoint::in_port(bv, 0));
  rhs.connect(Endpoint::out_port(av, 0), Endpoint::in_port(x, 0));
  rhs.connect(Endpoint::out_port(bv, 0), Endpoint::in_port(x, 1));
  return {lhs, tensor(rhs, scalar_diagram(2 * cond.k - 2 * cond.h))};
}

Diagram quantum_oracle(const BooleanFunction& f) {
  const int n = f.n();
  const int m = f.m();
  Diagram d(TypeList{n, m}, TypeList{n, m});
  const NodeId copy = d.add_node(Generator::green(n, 1, 2));
  const NodeId arrow = d.add_node(Generator::function_arrow(f));
  const NodeId x = d.add_node(Generator::red(m, 2, 1));
  d.connect(Endpoint::input(0), Endpoint::in_port(copy, 0));
  d.connect(Endpoint::out_port(copy, 0), Endpoint::output(0));
  d.connect(Endpoint::out_port(copy, 1), Endpoint::in_port(arrow, 0));
  d.connect(Endpoint::out_port(arrow, 0), Endpoint::in_port(x, 0));
  d.connect(Endpoint::input(1), Endpoint::in_port(x, 1));
  d.connect(Endpoint::out_port(x, 0), Endpoint::output(1));
  return d;
}

Diagram diagonal_oracle(const BooleanFunction& f) {
  if (f.m() != 1) throw SzxError(ErrorCode::NotBoolean, "diagonal oracle needs m = 1, got m = " + std::to_string(f.m()));
  const int n = f.n();
  Diagram d(TypeList{n}, TypeList{n});
  const NodeId copy = d.add_node(Generator::green(n, 1, 2));
  const NodeId arrow = d.add_node(Generator::function_arrow(f));
  const NodeId z = d.add_node(Generator::green(1, 1, 0, {kPi}));
  d.connect(Endpoint::input(0), Endpoint::in_port(copy, 0));
  d.connect(Endpoint::out_port(copy, 0), Endpoint::output(0));
  d.connect(Endpoint::out_port(copy, 1), Endpoint::in_port(arrow, 0));
  d.connect(Endpoint::out_port(arrow, 0), Endpoint::in_port(z, 0));
  return d;
}

Diagram diagonal_from_oracle(const Diagram& oracle, int n) {
  return compose_all({tensor(identity(TypeList{n}), build_state("-")), oracle,
                      tensor(identity(TypeList{n}), build_effect("-"))});
}

Diagram function_from_oracle(const Diagram& oracle, int n, int m) {
  return compose_all({tensor(identity(TypeList{n}), from_generator(Generator::red(m, 0, 1))), oracle,
                      tensor(green_erase(n), identity(TypeList{m}))});
}

}  // namespace szx
