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

// Circuit builders and verifiers for the Bernstein-Vazirani, Deutsch-Jozsa,
// Simon and Grover algorithms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szx/classical.hpp"
#include "szx/diagram.hpp"
#include "szx/semantics.hpp"

namespace szx {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0;
  double expected = 0;
  double tolerance = 0;
  std::string detail;
};

struct VerifyReport {
  std::string algorithm;
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string name, double measured, double expected, double tol, std::string detail = {});
  void add_flag(std::string name, bool ok, std::string detail = {});
};

enum class AlgorithmKind { BV, DJ, Simon, Grover };

std::string_view to_string(AlgorithmKind k);
AlgorithmKind algorithm_from_string(std::string_view s);

/// Problem data. Construction through make_instance checks the promise.
struct AlgorithmInstance {
  AlgorithmKind kind = AlgorithmKind::BV;
  int n = 0;
  int m = 0;
  Word s = 0;  // BV secret / Simon period
  Word x = 0;  // Grover marked element
  int k = 0;   // Grover iterations
  BooleanFunction f;
};

/// Throws PromiseViolated when f does not satisfy the algorithm's promise
/// (BV: f(x) = s.x; DJ: constant or balanced; Simon: period s != 0; Grover:
/// f is the point function at x) and Degenerate when n = 0.
void check_instance(const AlgorithmInstance& inst);

// Normalized basis preparations on a single wire [n].
Diagram zero_state(int n);
Diagram plus_state(int n);
Diagram minus_state(int n);
Diagram hadamard_layer(int n);

// Bernstein-Vazirani.
BooleanFunction bv_function(Word s, int n);
/// |0>^n, H-layer, U_f with a |-> ancilla, H-layer, ancilla discarded.
Diagram build_bv(const BooleanFunction& f);
Diagram build_bv(int n, Word s);
/// Throws PromiseViolated if `f` is given and is not x -> s.x.
VerifyReport verify_bv(int n, Word s, const Tolerance& tol = {}, const std::optional<BooleanFunction>& f = {});

// Deutsch-Jozsa on f : 2^n -> 2^m with a |->^m ancilla.
Diagram build_dj(const BooleanFunction& f);
VerifyReport verify_dj(const BooleanFunction& f, const Tolerance& tol = {});

// Simon.
bool simon_promise_holds(const BooleanFunction& f, Word s);
/// |0>^n, H-layer, U_f with a |0>^n ancilla, H-layer on the input register
/// and the function register discarded.
Diagram build_simon(const BooleanFunction& f);
VerifyReport verify_simon(int n, Word s, const BooleanFunction& f, const Tolerance& tol = {});
/// The nonzero s orthogonal to every sample, when the samples span a space of
/// rank n-1; nullopt (undetermined) otherwise.
std::optional<Word> simon_recover_s(const std::vector<Word>& samples, int n);
/// Simon's function with period s: x -> min(x, x ^ s), relabelled densely.
BooleanFunction simon_function(int n, Word s);

/// f = g . h with h the GF(2) projector x -> x ^ x_j s (j the first set bit
/// of s), whose kernel is {0, s} and whose image is the complement
/// {y : y_j = 0}. g agrees with f on that image and sends the other words, in
/// increasing order, to the unused values of f in increasing order (so g is
/// injective when m >= n; leftover words map to 0 otherwise).
struct SimonDecomposition {
  int pivot = 0;
  F2Matrix h;
  BooleanFunction g;
};
SimonDecomposition simon_decompose(const BooleanFunction& f, Word s);

// Grover.
struct GroverGeometry {
  double mu = 0;  // cos(mu/2) = -1/sqrt(2^n), sin(mu/2) = sqrt(2^n - 1)/sqrt(2^n)
  double nu = 0;  // 1/sqrt(2^n - 1); infinite for n = 0
  double cos_half = 0;
  double sin_half = 0;
};
/// Throws Degenerate for n = 0.
GroverGeometry grover_geometry(int n);

/// Reflection I - 2|0><0| conjugated by Hadamards: I - 2|+><+|.
Diagram grover_diffusion(int n);
/// One Grover step: diagonal oracle of f followed by the diffusion.
Diagram grover_step(const BooleanFunction& f);
/// |+>^n followed by k Grover steps, the steps built with iterate().
Diagram build_grover(const BooleanFunction& f, int k);
/// Same circuit with the steps composed explicitly.
Diagram build_grover_unrolled(const BooleanFunction& f, int k);
double grover_success_prob(int n, int k);
/// Closed-form amplitude (1 0) R(k mu) (-cos(mu/2), sin(mu/2))^T.
double grover_amplitude(int n, int k);
VerifyReport verify_grover(int n, Word x, int k, const Tolerance& tol = {});
/// First peak of grover_success_prob over k in [0, ceil(pi sqrt(2^n))].
int optimal_k(int n);

/// The isometry [1] -> [n] with columns |x> and nu * sum_{y != x} |y>.
Diagram grover_V(int n, Word x);
/// The rotation ((cos a, sin a), (-sin a, cos a)) on [1], up to global phase.
Diagram rotation_diagram(double a);
/// a|0> + b|1> on [1] for real a != 0, b >= 0 with a^2 + b^2 = 1 and a a
/// power of two; used for (-cos(mu/2), sin(mu/2)).
Diagram grover_start_vector(int n);
VerifyReport check_grover_lemma(int n, Word x, const Tolerance& tol = {});

/// Runs verify_* for an instance.
VerifyReport verify_instance(const AlgorithmInstance& inst, const Tolerance& tol = {});

}  // namespace szx
