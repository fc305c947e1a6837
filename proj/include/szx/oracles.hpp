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

// Function and matrix arrows, the quantum and diagonal oracles, and the
// graphical forms of the promises placed on oracle functions.

#include <optional>
#include <utility>

#include "szx/classical.hpp"
#include "szx/diagram.hpp"
#include "szx/semantics.hpp"

namespace szx {

Diagram function_arrow(const BooleanFunction& f);
Diagram red_matrix_arrow(const F2Matrix& a);
Diagram yellow_matrix_arrow(const BoolMatrix& a);

// Frequently used spiders on a single wire [n].
Diagram green_erase(int n);    // [n] -> []
Diagram green_unit(int n);     // [] -> [n]
Diagram green_copy(int n);     // [n] -> [n] (x) [n]
Diagram green_merge(int n);    // [n] (x) [n] -> [n]
Diagram red_xor(int n);        // [n] (x) [n] -> [n]

bool is_balanced(const BooleanFunction& f);
bool is_injective(const BooleanFunction& f);
bool is_constant(const BooleanFunction& f);
/// The matrix of f when f is GF(2)-linear.
std::optional<F2Matrix> linear_matrix(const BooleanFunction& f);

enum class Promise { Balanced, Injective };

/// The two sides of the graphical characterization of a promise: for
/// Balanced, the green unit fed into f against the green unit on [m] with its
/// scalar; for Injective, merge-then-f against f(x)f-then-merge.
std::pair<Diagram, Diagram> promise_diagrams(const BooleanFunction& f, Promise which);
bool graphical_promise_holds(const BooleanFunction& f, Promise which, const Tolerance& tol = {});

struct MetaCondition {
  bool holds = false;
  int k = 0;  // dim Ker(C;D)
  int h = 0;  // dim coKer(A B)
};

/// Shapes: C is n1 x p, D is n2 x p, A is r x n1, B is r x n2. Throws
/// ShapeMismatch otherwise.
MetaCondition meta_rule_condition(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d);

/// Diagram sides of the meta rule on [] -> [n1] (x) [n2]: the green spider on
/// [p] copied into C and D, against the copies of [n1] and [n2] sent through A
/// and B into a red spider on [r], with the scalar 2^((k-h)/2) computed from
/// the shapes.
std::pair<Diagram, Diagram> meta_rule_sides(const F2Matrix& a, const F2Matrix& b, const F2Matrix& c, const F2Matrix& d);

/// |x>|y> -> |x>|f(x) xor y> on [n] (x) [m].
Diagram quantum_oracle(const BooleanFunction& f);
/// |x> -> (-1)^f(x) |x>; throws NotBoolean unless m = 1.
Diagram diagonal_oracle(const BooleanFunction& f);
/// The diagonal oracle recovered from U_f with a |-> ancilla and <-| effect.
Diagram diagonal_from_oracle(const Diagram& oracle, int n);
/// The function arrow recovered from U_f: |0...0> ancilla (red unit) and a
/// green erase on the input register.
Diagram function_from_oracle(const Diagram& oracle, int n, int m);

}  // namespace szx
