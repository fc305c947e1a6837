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

#include <string_view>

#include <Eigen/Dense>

#include "szx/diagram.hpp"

namespace szx {

using CMatrix = Eigen::MatrixXcd;

/// Pure interpretation V. The represented matrix is 2^(scale/4) * entries;
/// rows index the output bits and columns the input bits, first wire most
/// significant.
struct Matrix {
  CMatrix entries;
  int scale = 0;

  CMatrix resolved() const;
};

/// CPM interpretation acting on column-stacked density matrices:
/// vec(rho) index i + d*j for rho_ij. For a pure map it is conj(V) (x) V.
struct Superoperator {
  CMatrix entries;
  int scale = 0;

  CMatrix resolved() const;
};

struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;
};

/// Throws NotPure on Discard/Mix nodes.
Matrix interp_pure(const Diagram& d);
Superoperator interp_cpm(const Diagram& d);
Superoperator doubling(const Matrix& v);

/// |x - y| <= abs + rel * max(|x|, |y|) for every entry.
bool close(const CMatrix& x, const CMatrix& y, const Tolerance& tol);
double max_abs_difference(const CMatrix& x, const CMatrix& y);

/// Equality of CPM interpretations. Throws TypeMismatch when boundary sizes
/// differ.
bool equal_semantics(const Diagram& a, const Diagram& b, const Tolerance& tol = {});
/// Largest entrywise difference between the two superoperators.
double semantic_distance(const Diagram& a, const Diagram& b);

/// H, Not, Z, Swap, CNot, CZ, Toffoli. Throws UnknownName.
Diagram build_gate(std::string_view name);
/// "0", "1", "+", "-". Throws UnknownName.
Diagram build_state(std::string_view name);
/// Effect: adjoint of the state of the same name.
Diagram build_effect(std::string_view name);

/// Computational basis state |bits> on [1]^n (one wire per bit), normalized.
Diagram basis_state(Word bits, int n);
/// Basis state on a single wire [n].
Diagram basis_state_wide(Word bits, int n);

/// <x| rho |x> for the state's interpreted density matrix. Throws
/// TypeMismatch unless the diagram has no inputs and `n` output bits.
double outcome_probability(const Diagram& state, Word bits, int n);
/// Diagonal of the density matrix of a state diagram.
std::vector<double> outcome_distribution(const Diagram& state);
/// Density matrix of a state diagram, resolved.
CMatrix density_matrix(const Diagram& state);

}  // namespace szx
