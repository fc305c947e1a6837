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

// Reference computations used by the tests. Nothing here calls the library's
// interpreter: diagrams are evaluated by brute-force summation over wire
// values using the generator formulas directly.

#include <random>
#include <vector>

#include "szx/diagram.hpp"
#include "szx/semantics.hpp"

namespace szx::oracle {

/// Pure matrix of a discard-free diagram by summing over every assignment of
/// internal wire bits. Rows index output bits, columns input bits.
CMatrix brute_force_pure(const Diagram& d);

/// Superoperator of a diagram with discards/mixes, by brute force over the
/// doubled wires.
CMatrix brute_force_cpm(const Diagram& d);

/// kron(conj(v), v): the doubling.
CMatrix doubled(const CMatrix& v);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Printed gate and state matrices.
CMatrix gate_table(const std::string& name);
CMatrix state_density(const std::string& name);

/// Permutation matrix of a classical map, scaled by 2^((m-n)/4).
CMatrix function_matrix(const BooleanFunction& f);

/// Random helpers.
BooleanFunction random_function(std::mt19937_64& rng, int n, int m);
double random_phase(std::mt19937_64& rng);

/// A random well-formed diagram built from compositions and tensor products of
/// small generators; pure unless `allow_discard`.
Diagram random_diagram(std::mt19937_64& rng, int max_nodes, bool allow_discard = false);

}  // namespace szx::oracle
