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

// Bundled derivations replayed as proof scripts.

#include <string>
#include <vector>

#include "szx/classical.hpp"
#include "szx/rewrite.hpp"

namespace szx {

/// U_f ; U_f rewritten to the identity on [n] (x) [m].
ProofScript oracle_involution_script(const BooleanFunction& f);
/// U_f with a |-> ancilla and <-| effect rewritten to the diagonal oracle of
/// f. Throws NotBoolean unless f has one output bit.
ProofScript diagonal_oracle_script(const BooleanFunction& f);
/// U_f with a red-unit ancilla and an erased input register rewritten to the
/// function arrow of f.
ProofScript function_from_oracle_script(const BooleanFunction& f);
/// The Bernstein-Vazirani circuit for x -> s.x rewritten to the basis state
/// |s>, with the linearity of f admitted as an oracle axiom.
ProofScript bv_script(int n, Word s);
/// iterate(f, 0) rewritten to f.
ProofScript iterate_base_script(const Diagram& f);
/// iterate(f, k) rewritten to f composed after iterate(f, k - 1), k >= 1.
ProofScript iterate_step_script(const Diagram& f, int k);

struct BundledScript {
  std::string file;  // file name under assets/proofs
  ProofScript script;
};

/// The scripts shipped as assets, with fixed small instances.
std::vector<BundledScript> bundled_scripts();

}  // namespace szx
