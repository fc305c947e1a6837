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

#include "szx/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "szx/oracles.hpp"
#include "szx/scalable.hpp"
#include "szx/scripts.hpp"

namespace szx {

namespace {

constexpr double kPi = std::numbers::pi;

Diagram stars(int count) {
  Diagram d = empty_diagram();
  for (int i = 0; i < count; ++i) d = tensor(d, from_generator(Generator::star()));
  return d;
}

void require_n(int n) {
  if (n <= 0) throw SzxError(ErrorCode::Degenerate, "register width must be positive, got " + std::to_string(n));
  if (n > 20) throw SzxError(ErrorCode::InvalidArgument, "register width too large: " + std::to_string(n));
}

void require_word(Word w, int n, const char* what) {
  if (n < 64 && (w >> n) != 0)
    throw SzxError(ErrorCode::InvalidArgument, std::string(what) + " does not fit in " + std::to_string(n) + " bits");
}

std::string bits(Word w, int n) { return word_to_string(w, n); }

double density_distance(const CMatrix& rho, const CMatrix& expected) { return max_abs_difference(rho, expected); }

CMatrix projector_mixture(const std::vector<Word>& support, int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  CMatrix m = CMatrix::Zero(d, d);
  for (Word y : support) m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(y)) = 1.0 / static_cast<double>(support.size());
  return m;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::add(std::string name, double measured, double expected, double tol, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.expected = expected;
  c.tolerance = tol;
  c.passed = std::isfinite(measured) && std::abs(measured - expected) <= tol;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
}

void VerifyReport::add_flag(std::string name, bool ok, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = ok ? 1 : 0;
  c.expected = 1;
  c.tolerance = 0;
  c.passed = ok;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
}

std::string_view to_string(AlgorithmKind k) {
  switch (k) {
    case AlgorithmKind::BV: return "bv";
    case AlgorithmKind::DJ: return "dj";
    case AlgorithmKind::Simon: return "simon";
    case AlgorithmKind::Grover: return "grover";
  }
  return "?";
}

AlgorithmKind algorithm_from_string(std::string_view s) {
  std::string t(s);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "bv" || t == "bernstein-vazirani") return AlgorithmKind::BV;
  if (t == "dj" || t == "deutsch-jozsa") return AlgorithmKind::DJ;
  if (t == "simon") return AlgorithmKind::Simon;
  if (t == "grover") return AlgorithmKind::Grover;
  throw SzxError(ErrorCode::UnknownName, "unknown algorithm '" + t + "'");
}

bool simon_promise_holds(const BooleanFunction& f, Word s) {
  const int n = f.n();
  if (s == 0 || (n < 64 && (s >> n) != 0)) return false;
  const Word size = Word{1} << n;
  for (Word x = 0; x < size; ++x)
    for (Word y = x + 1; y < size; ++y)
      if ((f(x) == f(y)) != (y == (x ^ s))) return false;
  return true;
}

void check_instance(const AlgorithmInstance& inst) {
  require_n(inst.n);
  if (inst.f.n() != inst.n)
    throw SzxError(ErrorCode::PromiseViolated, "function has " + std::to_string(inst.f.n()) + " input bits, expected " +
                                                   std::to_string(inst.n));
  switch (inst.kind) {
    case AlgorithmKind::BV:
      require_word(inst.s, inst.n, "s");
      if (!(inst.f == bv_function(inst.s, inst.n)))
        throw SzxError(ErrorCode::PromiseViolated, "f is not x -> s.x for s = " + bits(inst.s, inst.n));
      return;
    case AlgorithmKind::DJ:
      if (!is_constant(inst.f) && !is_balanced(inst.f))
        throw SzxError(ErrorCode::PromiseViolated, "f is neither constant nor balanced");
      return;
    case AlgorithmKind::Simon:
      require_word(inst.s, inst.n, "s");
      if (!simon_promise_holds(inst.f, inst.s))
        throw SzxError(ErrorCode::PromiseViolated, "f does not have period exactly s = " + bits(inst.s, inst.n));
      return;
    case AlgorithmKind::Grover:
      require_word(inst.x, inst.n, "x");
      if (inst.k < 0) throw SzxError(ErrorCode::InvalidArgument, "negative iteration count");
      if (!(inst.f == BooleanFunction::point(inst.n, inst.x)))
        throw SzxError(ErrorCode::PromiseViolated, "f is not the point function at x = " + bits(inst.x, inst.n));
      return;
  }
}

Diagram zero_state(int n) { return basis_state_wide(0, n); }

Diagram plus_state(int n) { return tensor(stars(n), green_unit(n)); }

Diagram minus_state(int n) {
  return tensor(stars(n), from_generator(Generator::green(n, 0, 1, std::vector<double>(static_cast<std::size_t>(n), kPi))));
}

Diagram hadamard_layer(int n) { return from_generator(Generator::hbox(n, 1, 1)); }

// Bernstein-Vazirani.

BooleanFunction bv_function(Word s, int n) {
  std::vector<Word> table(std::size_t{1} << n);
  for (Word x = 0; x < table.size(); ++x) table[x] = static_cast<Word>(parity(x & s));
  return BooleanFunction(n, 1, std::move(table));
}

Diagram build_bv(const BooleanFunction& f) {
  const int n = f.n();
  const int m = f.m();
  return compose_all({tensor(zero_state(n), minus_state(m)), tensor(hadamard_layer(n), identity(TypeList{m})),
                      quantum_oracle(f), tensor(hadamard_layer(n), from_generator(Generator::discard(m)))});
}

Diagram build_bv(int n, Word s) { return build_bv(bv_function(s, n)); }

VerifyReport verify_bv(int n, Word s, const Tolerance& tol, const std::optional<BooleanFunction>& f) {
  AlgorithmInstance inst{AlgorithmKind::BV, n, 1, s, 0, 0, f ? *f : BooleanFunction{}};
  if (!f) {
    require_n(n);
    require_word(s, n, "s");
    inst.f = bv_function(s, n);
  }
  check_instance(inst);
  VerifyReport r;
  r.algorithm = "bv";
  const Diagram circuit = build_bv(inst.f);
  const CMatrix rho = density_matrix(circuit);
  const Eigen::Index d = rho.rows();
  CMatrix expected = CMatrix::Zero(d, d);
  expected(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = 1.0;
  r.add("P(" + bits(s, n) + ")", rho(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)).real(), 1.0, tol.abs,
        "n=" + std::to_string(n));
  r.add("density = |s><s|", density_distance(rho, expected), 0.0, tol.abs, "max entry difference");
  const ProofReport proof = check_proof(bv_script(n, s), tol);
  r.add_flag("derivation replays", proof.passed(), std::to_string(proof.steps.size()) + " steps");
  return r;
}

// Deutsch-Jozsa.

Diagram build_dj(const BooleanFunction& f) { return build_bv(f); }

VerifyReport verify_dj(const BooleanFunction& f, const Tolerance& tol) {
  AlgorithmInstance inst{AlgorithmKind::DJ, f.n(), f.m(), 0, 0, 0, f};
  check_instance(inst);
  const bool constant = is_constant(f);
  VerifyReport r;
  r.algorithm = "dj";
  const std::vector<double> dist = outcome_distribution(build_dj(f));
  r.add("P(0^n)", dist[0], constant ? 1.0 : 0.0, tol.abs,
        std::string(constant ? "constant" : "balanced") + ", n=" + std::to_string(f.n()) + " m=" + std::to_string(f.m()));
  double total = 0;
  for (double x : dist) total += x;
  r.add("total probability", total, 1.0, tol.abs);
  return r;
}

// Simon.

BooleanFunction simon_function(int n, Word s) {
  require_n(n);
  require_word(s, n, "s");
  if (s == 0) throw SzxError(ErrorCode::PromiseViolated, "Simon period must be nonzero");
  std::vector<Word> table(std::size_t{1} << n);
  for (Word x = 0; x < table.size(); ++x) table[x] = std::min(x, x ^ s);
  return BooleanFunction(n, n, std::move(table));
}

Diagram build_simon(const BooleanFunction& f) {
  const int n = f.n();
  const int m = f.m();
  return compose_all({tensor(zero_state(n), zero_state(m)), tensor(hadamard_layer(n), identity(TypeList{m})),
                      quantum_oracle(f), tensor(hadamard_layer(n), from_generator(Generator::discard(m)))});
}

VerifyReport verify_simon(int n, Word s, const BooleanFunction& f, const Tolerance& tol) {
  AlgorithmInstance inst{AlgorithmKind::Simon, n, f.m(), s, 0, 0, f};
  check_instance(inst);
  VerifyReport r;
  r.algorithm = "simon";
  const CMatrix rho = density_matrix(build_simon(f));
  std::vector<Word> perp;
  for (Word y = 0; y < (Word{1} << n); ++y)
    if (parity(y & s) == 0) perp.push_back(y);
  const double weight = 1.0 / static_cast<double>(perp.size());
  double worst_on = 0;
  double worst_off = 0;
  for (Word y = 0; y < (Word{1} << n); ++y) {
    const double p = rho(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(y)).real();
    if (parity(y & s) == 0) worst_on = std::max(worst_on, std::abs(p - weight));
    else worst_off = std::max(worst_off, std::abs(p));
  }
  r.add("uniform on s-perp", worst_on, 0.0, tol.abs, "per-point error, weight " + std::to_string(weight));
  r.add("zero off s-perp", worst_off, 0.0, tol.abs);
  r.add("density = uniform mixture", density_distance(rho, projector_mixture(perp, n)), 0.0, tol.abs);

  const SimonDecomposition dec = simon_decompose(f, s);
  const BooleanFunction h = dec.h.to_function();
  bool factors = true;
  for (Word x = 0; x < (Word{1} << n); ++x) factors = factors && dec.g(h(x)) == f(x);
  r.add_flag("h is a projector with kernel {0, s}", dec.h.multiply(dec.h) == dec.h && f2_kernel(dec.h) == std::vector<Word>{s});
  r.add_flag("f = g . h", factors);
  r.add("arrow factorization", semantic_distance(compose(red_matrix_arrow(dec.h), function_arrow(dec.g)), function_arrow(f)), 0.0,
        tol.abs);
  r.add("circuit reduces to the projector", semantic_distance(build_simon(f), build_simon(h)), 0.0, tol.abs);
  return r;
}

SimonDecomposition simon_decompose(const BooleanFunction& f, Word s) {
  const int n = f.n();
  if (!simon_promise_holds(f, s)) throw SzxError(ErrorCode::PromiseViolated, "f does not have period s");
  SimonDecomposition d;
  while (word_bit(s, d.pivot, n) == 0) ++d.pivot;
  d.h = F2Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    if (word_bit(s, i, n)) d.h.set(i, d.pivot, d.h.get(i, d.pivot) ^ 1);
  const Word size = Word{1} << n;
  std::vector<Word> table(size, 0);
  std::vector<bool> used(std::size_t{1} << f.m(), false);
  for (Word y = 0; y < size; ++y)
    if (word_bit(y, d.pivot, n) == 0) {
      table[y] = f(y);
      used[f(y)] = true;
    }
  Word next = 0;
  for (Word y = 0; y < size; ++y) {
    if (word_bit(y, d.pivot, n) == 0) continue;
    while (next < used.size() && used[next]) ++next;
    if (next < used.size()) {
      table[y] = next;
      used[next] = true;
    }
  }
  d.g = BooleanFunction(n, f.m(), table);
  return d;
}

std::optional<Word> simon_recover_s(const std::vector<Word>& samples, int n) {
  if (n <= 0) return std::nullopt;
  F2Matrix a(static_cast<int>(samples.size()), n, samples);
  if (samples.empty()) a = F2Matrix(0, n);
  const std::vector<Word> kernel = f2_kernel(a);
  if (kernel.size() != 1) return std::nullopt;
  return kernel.front();
}

// Grover.

GroverGeometry grover_geometry(int n) {
  if (n <= 0) throw SzxError(ErrorCode::Degenerate, "Grover needs n >= 1");
  const double size = std::ldexp(1.0, n);
  GroverGeometry g;
  g.cos_half = -1.0 / std::sqrt(size);
  g.sin_half = std::sqrt(size - 1.0) / std::sqrt(size);
  g.mu = 2.0 * std::atan2(g.sin_half, g.cos_half);
  g.nu = 1.0 / std::sqrt(size - 1.0);
  return g;
}

Diagram grover_diffusion(int n) {
  Diagram and_phase(TypeList{n}, TypeList{n});
  const NodeId copy = and_phase.add_node(Generator::green(n, 1, 2));
  const NodeId conj = and_phase.add_node(Generator::yellow_arrow(BoolMatrix::ones(1, n)));
  const NodeId z = and_phase.add_node(Generator::green(1, 1, 0, {kPi}));
  and_phase.connect(Endpoint::input(0), Endpoint::in_port(copy, 0));
  and_phase.connect(Endpoint::out_port(copy, 0), Endpoint::output(0));
  and_phase.connect(Endpoint::out_port(copy, 1), Endpoint::in_port(conj, 0));
  and_phase.connect(Endpoint::out_port(conj, 0), Endpoint::in_port(z, 0));
  const Diagram flip =
      from_generator(Generator::red(n, 1, 1, std::vector<double>(static_cast<std::size_t>(n), kPi)));
  return compose_all({hadamard_layer(n), flip, and_phase, flip, hadamard_layer(n)});
}

Diagram grover_step(const BooleanFunction& f) { return compose(diagonal_oracle(f), grover_diffusion(f.n())); }

Diagram build_grover(const BooleanFunction& f, int k) {
  if (k < 0) throw SzxError(ErrorCode::InvalidArgument, "negative iteration count");
  require_n(f.n());
  const Diagram start = compose(zero_state(f.n()), hadamard_layer(f.n()));
  if (k == 0) return start;
  return compose(start, iterate(grover_step(f), k - 1));
}

Diagram build_grover_unrolled(const BooleanFunction& f, int k) {
  if (k < 0) throw SzxError(ErrorCode::InvalidArgument, "negative iteration count");
  require_n(f.n());
  const Diagram start = compose(zero_state(f.n()), hadamard_layer(f.n()));
  if (k == 0) return start;
  return compose(start, unroll(grover_step(f), k - 1));
}

double grover_amplitude(int n, int k) {
  const GroverGeometry g = grover_geometry(n);
  const double a = k * g.mu;
  return std::cos(a) * -g.cos_half + std::sin(a) * g.sin_half;
}

double grover_success_prob(int n, int k) {
  const GroverGeometry g = grover_geometry(n);
  const double c = std::cos((2.0 * k + 1.0) * g.mu / 2.0);
  return c * c;
}

int optimal_k(int n) {
  if (n <= 0) throw SzxError(ErrorCode::Degenerate, "Grover needs n >= 1");
  const int limit = static_cast<int>(std::ceil(kPi * std::sqrt(std::ldexp(1.0, n))));
  // First peak of the scan; later peaks of the periodic closed form can be
  // marginally higher but cost more iterations.
  for (int k = 0; k < limit; ++k)
    if (grover_success_prob(n, k) >= grover_success_prob(n, k + 1) - 1e-12) return k;
  return limit;
}

VerifyReport verify_grover(int n, Word x, int k, const Tolerance& tol) {
  require_n(n);
  require_word(x, n, "x");
  const BooleanFunction f = BooleanFunction::point(n, x);
  check_instance({AlgorithmKind::Grover, n, 1, 0, x, k, f});
  VerifyReport r;
  r.algorithm = "grover";
  const Diagram circuit = build_grover(f, k);
  const Diagram unrolled = build_grover_unrolled(f, k);
  const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
  r.add("P(x)", outcome_probability(circuit, x, n), grover_success_prob(n, k), tol.abs, where);
  r.add_flag("iterate = unroll", equal_semantics(circuit, unrolled, tol));
  const Matrix amp = interp_pure(compose(unrolled, adjoint(basis_state_wide(x, n))));
  const cd value = amp.resolved()(0, 0);
  r.add("amplitude", value.real(), grover_amplitude(n, k), tol.abs, "imaginary part " + std::to_string(value.imag()));
  r.add("amplitude imaginary part", value.imag(), 0.0, tol.abs);
  return r;
}

// The isometry V onto span{|x>, uniform superposition of the rest}.

Diagram grover_V(int n, Word x) {
  require_n(n);
  require_word(x, n, "x");
  const GroverGeometry g = grover_geometry(n);
  Diagram weight(TypeList{1}, TypeList{1});
  const NodeId copy = weight.add_node(Generator::green(1, 1, 2));
  const NodeId h = weight.add_node(Generator::hbox(1, 1, 0, {cd{g.nu, 0}}));
  weight.connect(Endpoint::input(0), Endpoint::in_port(copy, 0));
  weight.connect(Endpoint::out_port(copy, 0), Endpoint::output(0));
  weight.connect(Endpoint::out_port(copy, 1), Endpoint::in_port(h, 0));
  const Diagram v = compose_all({weight, from_generator(Generator::red(1, 1, 1, {kPi})),
                                 transpose(function_arrow(BooleanFunction::point(n, x)))});
  return tensor(v, scalar_diagram(n - 1));
}

Diagram rotation_diagram(double a) {
  return compose_all({from_generator(Generator::green(1, 1, 1, {normalize_phase(kPi / 2)})),
                      from_generator(Generator::red(1, 1, 1, {normalize_phase(2 * a)})),
                      from_generator(Generator::green(1, 1, 1, {normalize_phase(-kPi / 2)}))});
}

Diagram grover_start_vector(int n) {
  require_n(n);
  const double size = std::ldexp(1.0, n);
  return tensor(from_generator(Generator::hbox(1, 0, 1, {cd{std::sqrt(size - 1.0), 0}})), scalar_diagram(1 - 2 * n));
}

namespace {

CMatrix observation_matrix(int j) {
  const double size = std::ldexp(1.0, j);
  const double r = 1.0 / std::sqrt(size);
  CMatrix m(2, 2);
  m << r, (size - 1.0) * r, r, -r;
  return m;
}

}  // namespace

VerifyReport check_grover_lemma(int n, Word x, const Tolerance& tol) {
  VerifyReport r;
  r.algorithm = "grover-lemma";
  const GroverGeometry g = grover_geometry(n);
  const Diagram v = grover_V(n, x);
  const std::string where = "n=" + std::to_string(n) + " x=" + bits(x, n);

  const CMatrix vm = interp_pure(v).resolved();
  CMatrix expected = CMatrix::Zero(vm.rows(), 2);
  for (Word y = 0; y < (Word{1} << n); ++y)
    expected(static_cast<Eigen::Index>(y), y == x ? 0 : 1) = y == x ? 1.0 : g.nu;
  r.add("V columns", max_abs_difference(vm, expected), 0.0, tol.abs, where);
  r.add("nu^2 (2^n - 1)", g.nu * g.nu * (std::ldexp(1.0, n) - 1.0), 1.0, tol.abs);

  r.add_flag("V|0> = |x>", equal_semantics(compose(zero_state(1), v), basis_state_wide(x, n), tol), where);
  r.add_flag("V(-cos, sin) = |+>", equal_semantics(compose(grover_start_vector(n), v), plus_state(n), tol), where);
  r.add_flag("V^dagger V = id", equal_semantics(compose(v, adjoint(v)), identity(TypeList{1}), tol), where);
  const Diagram step = grover_step(BooleanFunction::point(n, x));
  r.add_flag("G V = V R(mu)", equal_semantics(compose(v, step), compose(rotation_diagram(g.mu), v), tol), where);

  const CMatrix gm = interp_pure(step).resolved();
  CMatrix rot(2, 2);
  rot << std::cos(g.mu), std::sin(g.mu), -std::sin(g.mu), std::cos(g.mu);
  r.add("G V = V R(mu) (pure)", max_abs_difference(gm * vm, vm * rot), 0.0, tol.abs);

  if (n >= 2) {
    CMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    CMatrix e = CMatrix::Zero(4, 2);
    e(0, 0) = 1;
    e(1, 1) = e(2, 1) = e(3, 1) = 1;
    const CMatrix m1 = observation_matrix(n - 1);
    CMatrix kron(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) kron.block(2 * i, 2 * j, 2, 2) = h(i, j) * m1;
    r.add("induction identity", max_abs_difference(kron * e, e * observation_matrix(n)), 0.0, tol.abs);
  }
  return r;
}

VerifyReport verify_instance(const AlgorithmInstance& inst, const Tolerance& tol) {
  check_instance(inst);
  switch (inst.kind) {
    case AlgorithmKind::BV: return verify_bv(inst.n, inst.s, tol, inst.f);
    case AlgorithmKind::DJ: return verify_dj(inst.f, tol);
    case AlgorithmKind::Simon: return verify_simon(inst.n, inst.s, inst.f, tol);
    case AlgorithmKind::Grover: return verify_grover(inst.n, inst.x, inst.k, tol);
  }
  return {};
}

}  // namespace szx
