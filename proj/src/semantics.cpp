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

#include "szx/semantics.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>

#include "szx/tensor.hpp"

namespace szx {

CMatrix Matrix::resolved() const { return entries * quarter_pow2(scale); }
CMatrix Superoperator::resolved() const { return entries * quarter_pow2(scale); }

namespace {

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

// A node tensor over flat port bits: output ports' bits first, then input
// ports' bits, each port most significant bit first.
struct LocalTensor {
  std::vector<int> bits;
  std::vector<cd> data;
};

int flat_offset(const Generator& g, bool out, int port) {
  int off = 0;
  const auto ow = g.out_widths();
  const auto iw = g.in_widths();
  if (out) {
    for (int i = 0; i < port; ++i) off += ow[static_cast<std::size_t>(i)];
    return off;
  }
  off = std::accumulate(ow.begin(), ow.end(), 0);
  for (int i = 0; i < port; ++i) off += iw[static_cast<std::size_t>(i)];
  return off;
}

// Pairs of flat bits identified by a wiring generator (Discard/Mix excluded).
std::vector<std::pair<int, int>> wiring_links(const Generator& g) {
  std::vector<std::pair<int, int>> out;
  auto at = [&](bool o, int p, int b) { return flat_offset(g, o, p) + b; };
  switch (g.kind) {
    case Kind::Identity:
      for (int i = 0; i < g.width; ++i) out.emplace_back(at(false, 0, i), at(true, 0, i));
      break;
    case Kind::Swap:
      for (int i = 0; i < g.width; ++i) out.emplace_back(at(false, 0, i), at(true, 1, i));
      for (int i = 0; i < g.width2; ++i) out.emplace_back(at(false, 1, i), at(true, 0, i));
      break;
    case Kind::Cup:
      for (int i = 0; i < g.width; ++i) out.emplace_back(at(true, 0, i), at(true, 1, i));
      break;
    case Kind::Cap:
      for (int i = 0; i < g.width; ++i) out.emplace_back(at(false, 0, i), at(false, 1, i));
      break;
    case Kind::Divider:
      out.emplace_back(at(false, 0, 0), at(true, 0, 0));
      for (int i = 0; i < g.width; ++i) out.emplace_back(at(false, 0, i + 1), at(true, 1, i));
      break;
    case Kind::Gatherer:
      out.emplace_back(at(true, 0, 0), at(false, 0, 0));
      for (int i = 0; i < g.width; ++i) out.emplace_back(at(true, 0, i + 1), at(false, 1, i));
      break;
    default: break;
  }
  return out;
}

// Tensors and quarter-power exponent of a non-wiring pure generator.
void generator_tensors(const Generator& g, std::vector<LocalTensor>& out, int& qexp) {
  switch (g.kind) {
    case Kind::Green:
    case Kind::Red:
    case Kind::HBox: {
      const int k = g.width;
      const int legs = g.n_in + g.n_out;
      const std::size_t size = std::size_t{1} << legs;
      for (int j = 0; j < k; ++j) {
        LocalTensor t;
        for (int l = 0; l < legs; ++l) t.bits.push_back(l * k + j);
        t.data.assign(size, cd{0, 0});
        if (g.kind == Kind::Green) {
          const cd ph = std::polar(1.0, g.phases[static_cast<std::size_t>(j)]);
          t.data[0] += 1.0;
          t.data[size - 1] += ph;
        } else if (g.kind == Kind::Red) {
          const cd ph = std::polar(1.0, g.phases[static_cast<std::size_t>(j)]);
          for (std::size_t x = 0; x < size; ++x)
            t.data[x] = 1.0 + ph * (parity(x) ? -1.0 : 1.0);
        } else {
          for (std::size_t x = 0; x < size; ++x) t.data[x] = 1.0;
          t.data[size - 1] = g.labels[static_cast<std::size_t>(j)];
        }
        out.push_back(std::move(t));
      }
      if (g.kind == Kind::Green) qexp += k * (legs - 2);
      else if (g.kind == Kind::Red) qexp += k * (-legs - 2);
      else qexp -= k * legs;
      return;
    }
    case Kind::FunctionArrow:
    case Kind::RedArrow:
    case Kind::YellowArrow: {
      const BooleanFunction f = g.arrow_function();
      const int n = f.n();
      const int m = f.m();
      LocalTensor t;
      for (int b = 0; b < n + m; ++b) t.bits.push_back(b);
      t.data.assign(std::size_t{1} << (n + m), cd{0, 0});
      for (Word x = 0; x < (Word{1} << n); ++x) t.data[(f(x) << n) | x] = 1.0;
      out.push_back(std::move(t));
      qexp += m - n;
      return;
    }
    case Kind::Star:
      qexp -= 1;
      return;
    default:
      throw SzxError(ErrorCode::InvalidArgument, "not a tensor generator: " + g.describe());
  }
}

struct Interpreted {
  CMatrix entries;
  int scale = 0;
};

// Contracts the bit-level network of `d`. With `doubled`, a conjugate copy is
// added and Discard/Mix join the two copies; rows are then (copy B, copy A)
// output bits and columns (copy B, copy A) input bits.
Interpreted interpret(const Diagram& d, bool doubled) {
  const int layers = doubled ? 2 : 1;
  UnionFind uf;
  std::map<std::tuple<int, Endpoint, int>, int> bit_id;
  auto bit = [&](int layer, Endpoint e, int b) {
    auto key = std::make_tuple(layer, e, b);
    auto it = bit_id.find(key);
    if (it != bit_id.end()) return it->second;
    const int id = uf.add();
    bit_id.emplace(key, id);
    return id;
  };
  auto node_bit = [&](int layer, NodeId id, const Generator& g, int flat) {
    // Maps a flat bit back to its port.
    const auto ow = g.out_widths();
    const auto iw = g.in_widths();
    for (std::size_t p = 0; p < ow.size(); ++p) {
      if (flat < ow[p]) return bit(layer, Endpoint::out_port(id, static_cast<int>(p)), flat);
      flat -= ow[p];
    }
    for (std::size_t p = 0; p < iw.size(); ++p) {
      if (flat < iw[p]) return bit(layer, Endpoint::in_port(id, static_cast<int>(p)), flat);
      flat -= iw[p];
    }
    throw SzxError(ErrorCode::InvalidArgument, "flat bit out of range");
  };

  std::vector<bool> is_terminal;
  auto mark_terminal = [&](int b) {
    if (static_cast<int>(is_terminal.size()) <= b) is_terminal.resize(static_cast<std::size_t>(b) + 1, false);
    is_terminal[static_cast<std::size_t>(b)] = true;
  };

  // Boundary bits, in the order of the open legs.
  std::vector<int> out_bits[2];
  std::vector<int> in_bits[2];
  for (int layer = 0; layer < layers; ++layer) {
    for (int i = 0; i < static_cast<int>(d.outputs().length()); ++i)
      for (int b = 0; b < d.outputs()[static_cast<std::size_t>(i)]; ++b) {
        out_bits[layer].push_back(bit(layer, Endpoint::output(i), b));
        mark_terminal(out_bits[layer].back());
      }
    for (int i = 0; i < static_cast<int>(d.inputs().length()); ++i)
      for (int b = 0; b < d.inputs()[static_cast<std::size_t>(i)]; ++b) {
        in_bits[layer].push_back(bit(layer, Endpoint::input(i), b));
        mark_terminal(in_bits[layer].back());
      }
  }

  int qexp = 0;
  struct Pending {
    std::vector<int> bits;  // bit ids
    std::vector<cd> data;
  };
  std::vector<Pending> pending;
  for (const auto& [id, g] : d.nodes()) {
    if (!g.is_pure()) {
      if (!doubled) throw SzxError(ErrorCode::NotPure, "discard/mix node " + std::to_string(id));
      const bool out = g.kind == Kind::Mix;
      for (int b = 0; b < g.width; ++b) uf.unite(bit(0, Endpoint{id, out, 0}, b), bit(1, Endpoint{id, out, 0}, b));
      continue;
    }
    if (g.is_wiring()) {
      for (int layer = 0; layer < layers; ++layer)
        for (auto [a, b] : wiring_links(g)) uf.unite(node_bit(layer, id, g, a), node_bit(layer, id, g, b));
      continue;
    }
    std::vector<LocalTensor> local;
    int q = 0;
    generator_tensors(g, local, q);
    qexp += q * layers;
    for (int layer = 0; layer < layers; ++layer) {
      for (const LocalTensor& t : local) {
        Pending p;
        for (int fb : t.bits) {
          p.bits.push_back(node_bit(layer, id, g, fb));
          mark_terminal(p.bits.back());
        }
        p.data = t.data;
        if (layer == 1)
          for (auto& x : p.data) x = std::conj(x);
        pending.push_back(std::move(p));
      }
    }
  }
  for (const auto& [a, b] : d.edges()) {
    const int w = d.width(a);
    for (int layer = 0; layer < layers; ++layer)
      for (int i = 0; i < w; ++i) uf.unite(bit(layer, a, i), bit(layer, b, i));
  }

  // Classify classes: paths with two terminals or closed loops.
  const int total = static_cast<int>(bit_id.size());
  is_terminal.resize(static_cast<std::size_t>(total), false);
  std::map<int, std::vector<int>> terminals;
  std::map<int, int> members;
  for (int b = 0; b < total; ++b) {
    const int r = uf.find(b);
    ++members[r];
    if (is_terminal[static_cast<std::size_t>(b)]) terminals[r].push_back(b);
  }
  std::map<int, int> label_of_bit;
  std::vector<tn::Tensor> tensors;
  int next_label = 0;
  for (const auto& [r, count] : members) {
    auto it = terminals.find(r);
    if (it == terminals.end()) {
      qexp += 4;  // closed loop: trace of the identity on one bit
      continue;
    }
    const auto& ts = it->second;
    if (ts.size() != 2)
      throw SzxError(ErrorCode::ValidationFailed, "ill-formed wiring: a bit has " + std::to_string(ts.size()) + " ends");
    const int l = next_label++;
    label_of_bit[ts[0]] = l;
    label_of_bit[ts[1]] = l;
  }
  for (Pending& p : pending) {
    tn::Tensor t;
    for (int b : p.bits) t.legs.push_back(label_of_bit.at(b));
    t.data = std::move(p.data);
    tensors.push_back(std::move(t));
  }

  std::vector<int> open;
  std::vector<int> order;  // boundary bits in result order
  for (int layer = layers - 1; layer >= 0; --layer) order.insert(order.end(), out_bits[layer].begin(), out_bits[layer].end());
  const std::size_t n_rows_bits = order.size();
  for (int layer = layers - 1; layer >= 0; --layer) order.insert(order.end(), in_bits[layer].begin(), in_bits[layer].end());

  std::set<int> opened;
  for (int b : order) {
    const int l = label_of_bit.at(b);
    if (opened.insert(l).second) {
      open.push_back(l);
    } else {
      // Both ends of this wire are boundary bits: split with a delta.
      const int fresh = next_label++;
      open.push_back(fresh);
      tn::Tensor delta{{l, fresh}, {1.0, 0.0, 0.0, 1.0}};
      tensors.push_back(std::move(delta));
    }
  }
  tn::Tensor r = tn::contract_network(std::move(tensors), open);
  const Eigen::Index rows = Eigen::Index{1} << n_rows_bits;
  const Eigen::Index cols = Eigen::Index{1} << (order.size() - n_rows_bits);
  Interpreted res;
  res.entries.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) res.entries(i, j) = r.data[static_cast<std::size_t>(i * cols + j)];
  res.scale = qexp;
  return res;
}

}  // namespace

Matrix interp_pure(const Diagram& d) {
  Interpreted r = interpret(d, false);
  return Matrix{std::move(r.entries), r.scale};
}

Superoperator doubling(const Matrix& v) {
  const CMatrix c = v.entries.conjugate();
  const Eigen::Index r = v.entries.rows();
  const Eigen::Index k = v.entries.cols();
  CMatrix out(r * r, k * k);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < k; ++j) out.block(i * r, j * k, r, k) = c(i, j) * v.entries;
  return Superoperator{std::move(out), 2 * v.scale};
}

Superoperator interp_cpm(const Diagram& d) {
  if (d.is_pure()) return doubling(interp_pure(d));
  Interpreted r = interpret(d, true);
  return Superoperator{std::move(r.entries), r.scale};
}

bool close(const CMatrix& x, const CMatrix& y, const Tolerance& tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double a = std::abs(x(i, j));
      const double b = std::abs(y(i, j));
      if (std::abs(x(i, j) - y(i, j)) > tol.abs + tol.rel * std::max(a, b)) return false;
    }
  return true;
}

double max_abs_difference(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return std::numeric_limits<double>::infinity();
  if (x.size() == 0) return 0.0;
  return (x - y).cwiseAbs().maxCoeff();
}

namespace {

void check_sizes(const Diagram& a, const Diagram& b) {
  if (a.inputs().size() != b.inputs().size() || a.outputs().size() != b.outputs().size()) {
    throw SzxError(ErrorCode::TypeMismatch, "boundaries " + to_string(a.inputs()) + " -> " + to_string(a.outputs()) +
                                                " and " + to_string(b.inputs()) + " -> " + to_string(b.outputs()));
  }
}

// Doubled pure maps agree iff the products v[p] conj(v[q]) agree; checked
// without forming the Kronecker products when a phase alignment suffices.
bool equal_doubled(const CMatrix& va, const CMatrix& vb, const Tolerance& tol) {
  const cd z = (vb.conjugate().cwiseProduct(va)).sum();
  const cd c = std::abs(z) > 0 ? z / std::abs(z) : cd{1, 0};
  const double delta = va.size() ? (va - c * vb).cwiseAbs().maxCoeff() : 0.0;
  const double m = va.size() ? std::max(va.cwiseAbs().maxCoeff(), vb.cwiseAbs().maxCoeff()) : 0.0;
  if (2 * m * delta + delta * delta <= tol.abs) return true;
  const cd* pa = va.data();
  const cd* pb = vb.data();
  const Eigen::Index n = va.size();
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q) {
      const cd x = pa[p] * std::conj(pa[q]);
      const cd y = pb[p] * std::conj(pb[q]);
      if (std::abs(x - y) > tol.abs + tol.rel * std::max(std::abs(x), std::abs(y))) return false;
    }
  return true;
}

}  // namespace

bool equal_semantics(const Diagram& a, const Diagram& b, const Tolerance& tol) {
  check_sizes(a, b);
  if (a.is_pure() && b.is_pure()) return equal_doubled(interp_pure(a).resolved(), interp_pure(b).resolved(), tol);
  return close(interp_cpm(a).resolved(), interp_cpm(b).resolved(), tol);
}

double semantic_distance(const Diagram& a, const Diagram& b) {
  check_sizes(a, b);
  if (!a.is_pure() || !b.is_pure()) return max_abs_difference(interp_cpm(a).resolved(), interp_cpm(b).resolved());
  // max |va[p] conj(va[q]) - vb[p] conj(vb[q])| without forming the products.
  const CMatrix va = interp_pure(a).resolved();
  const CMatrix vb = interp_pure(b).resolved();
  const cd* pa = va.data();
  const cd* pb = vb.data();
  const Eigen::Index n = va.size();
  double worst = 0;
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q) worst = std::max(worst, std::abs(pa[p] * std::conj(pa[q]) - pb[p] * std::conj(pb[q])));
  return worst;
}

namespace {

constexpr double kPi = std::numbers::pi;

Diagram star_diagram() { return from_generator(Generator::star()); }

// Joins node ports to fresh boundary slots in the order given.
Diagram wire_up(Diagram d, const std::vector<Endpoint>& ins, const std::vector<Endpoint>& outs) {
  for (std::size_t i = 0; i < ins.size(); ++i) d.connect(Endpoint::input(static_cast<int>(i)), ins[i]);
  for (std::size_t i = 0; i < outs.size(); ++i) d.connect(outs[i], Endpoint::output(static_cast<int>(i)));
  return d;
}

}  // namespace

Diagram build_state(std::string_view name) {
  Generator g;
  if (name == "0") g = Generator::red(1, 0, 1);
  else if (name == "1") g = Generator::red(1, 0, 1, {kPi});
  else if (name == "+") g = Generator::green(1, 0, 1);
  else if (name == "-") g = Generator::green(1, 0, 1, {kPi});
  else throw SzxError(ErrorCode::UnknownName, "unknown state '" + std::string(name) + "'");
  return tensor(star_diagram(), from_generator(g));
}

Diagram build_effect(std::string_view name) { return adjoint(build_state(name)); }

Diagram build_gate(std::string_view name) {
  if (name == "H") return from_generator(Generator::hbox(1, 1, 1));
  if (name == "Not") return from_generator(Generator::red(1, 1, 1, {kPi}));
  if (name == "Z") return from_generator(Generator::green(1, 1, 1, {kPi}));
  if (name == "Swap") return from_generator(Generator::swap(1, 1));
  if (name == "CNot") {
    Diagram d(TypeList{1, 1}, TypeList{1, 1});
    const NodeId c = d.add_node(Generator::green(1, 1, 2));
    const NodeId t = d.add_node(Generator::red(1, 2, 1));
    d.connect(Endpoint::out_port(c, 1), Endpoint::in_port(t, 0));
    return wire_up(std::move(d), {Endpoint::in_port(c, 0), Endpoint::in_port(t, 1)},
                   {Endpoint::out_port(c, 0), Endpoint::out_port(t, 0)});
  }
  if (name == "CZ") {
    Diagram d(TypeList{1, 1}, TypeList{1, 1});
    const NodeId a = d.add_node(Generator::green(1, 1, 2));
    const NodeId b = d.add_node(Generator::green(1, 1, 2));
    const NodeId h = d.add_node(Generator::hbox(1, 1, 1));
    d.connect(Endpoint::out_port(a, 1), Endpoint::in_port(h, 0));
    d.connect(Endpoint::out_port(h, 0), Endpoint::out_port(b, 1));
    return wire_up(std::move(d), {Endpoint::in_port(a, 0), Endpoint::in_port(b, 0)},
                   {Endpoint::out_port(a, 0), Endpoint::out_port(b, 0)});
  }
  if (name == "Toffoli") {
    Diagram d(TypeList{1, 1, 1}, TypeList{1, 1, 1});
    const NodeId a = d.add_node(Generator::green(1, 1, 2));
    const NodeId b = d.add_node(Generator::green(1, 1, 2));
    Generator and_arrow = Generator::yellow_arrow(BoolMatrix::ones(1, 2));
    and_arrow.fanned = true;
    const NodeId f = d.add_node(and_arrow);
    const NodeId x = d.add_node(Generator::red(1, 2, 1));
    d.connect(Endpoint::out_port(a, 1), Endpoint::in_port(f, 0));
    d.connect(Endpoint::out_port(b, 1), Endpoint::in_port(f, 1));
    d.connect(Endpoint::out_port(f, 0), Endpoint::in_port(x, 0));
    return wire_up(std::move(d), {Endpoint::in_port(a, 0), Endpoint::in_port(b, 0), Endpoint::in_port(x, 1)},
                   {Endpoint::out_port(a, 0), Endpoint::out_port(b, 0), Endpoint::out_port(x, 0)});
  }
  throw SzxError(ErrorCode::UnknownName, "unknown gate '" + std::string(name) + "'");
}

Diagram basis_state(Word bits, int n) {
  std::vector<Diagram> parts;
  for (int j = 0; j < n; ++j) parts.push_back(build_state(word_bit(bits, j, n) ? "1" : "0"));
  return tensor_all(parts);
}

Diagram basis_state_wide(Word bits, int n) {
  std::vector<double> ph;
  for (int j = 0; j < n; ++j) ph.push_back(word_bit(bits, j, n) ? kPi : 0.0);
  Diagram d = from_generator(Generator::red(n, 0, 1, ph));
  for (int j = 0; j < n; ++j) d = tensor(star_diagram(), d);
  return d;
}

CMatrix density_matrix(const Diagram& state) {
  if (!state.inputs().empty()) throw SzxError(ErrorCode::TypeMismatch, "not a state: " + to_string(state.inputs()));
  const CMatrix v = interp_cpm(state).resolved();
  const Eigen::Index d = Eigen::Index{1} << state.outputs().size();
  CMatrix rho(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) rho(i, j) = v(i + d * j, 0);
  return rho;
}

std::vector<double> outcome_distribution(const Diagram& state) {
  const CMatrix rho = density_matrix(state);
  std::vector<double> out(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) out[static_cast<std::size_t>(i)] = rho(i, i).real();
  return out;
}

double outcome_probability(const Diagram& state, Word bits, int n) {
  if (!state.inputs().empty() || state.outputs().size() != n)
    throw SzxError(ErrorCode::TypeMismatch, "expected a state on " + std::to_string(n) + " bits");
  return outcome_distribution(state)[bits];
}

}  // namespace szx
