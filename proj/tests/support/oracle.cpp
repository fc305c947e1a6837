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

#include "oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "szx/scalable.hpp"

namespace szx::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Bits of each port, as words, for one assignment.
struct PortValues {
  std::vector<Word> in;
  std::vector<Word> out;
};

cd node_value(const Generator& g, const PortValues& v) {
  const int legs = g.n_in + g.n_out;
  switch (g.kind) {
    case Kind::Green:
    case Kind::Red:
    case Kind::HBox: {
      const int k = g.width;
      // Legs listed outputs then inputs (order is irrelevant).
      std::vector<Word> words = v.out;
      words.insert(words.end(), v.in.begin(), v.in.end());
      cd value = 1.0;
      if (g.kind == Kind::Green) {
        for (const Word w : words)
          if (w != words.front()) return 0.0;
        const Word x = words.empty() ? 0 : words.front();
        if (words.empty()) {
          // Sum over the single word x.
          cd s = 0.0;
          for (Word y = 0; y < (Word{1} << k); ++y) {
            double phase = 0;
            for (int j = 0; j < k; ++j) phase += word_bit(y, j, k) * g.phases[j];
            s += std::polar(1.0, phase);
          }
          return s * std::exp2(k * (legs - 2) / 4.0);
        }
        double phase = 0;
        for (int j = 0; j < k; ++j) phase += word_bit(x, j, k) * g.phases[j];
        return std::polar(1.0, phase) * std::exp2(k * (legs - 2) / 4.0);
      }
      if (g.kind == Kind::Red) {
        for (int j = 0; j < k; ++j) {
          int sum = 0;
          for (const Word w : words) sum += word_bit(w, j, k);
          value *= (1.0 + std::polar(1.0, g.phases[j] + kPi * sum)) / 2.0;
        }
        return value * std::exp2(k * (2 - legs) / 4.0);
      }
      for (int j = 0; j < k; ++j) {
        bool all = true;
        for (const Word w : words) all = all && word_bit(w, j, k);
        if (all) value *= g.labels[j];
      }
      return value * std::exp2(-k * legs / 4.0);
    }
    case Kind::Identity: return v.in[0] == v.out[0] ? 1.0 : 0.0;
    case Kind::Swap: return (v.in[0] == v.out[1] && v.in[1] == v.out[0]) ? 1.0 : 0.0;
    case Kind::Cup: return v.out[0] == v.out[1] ? 1.0 : 0.0;
    case Kind::Cap: return v.in[0] == v.in[1] ? 1.0 : 0.0;
    case Kind::Divider: return v.in[0] == ((v.out[0] << g.width) | v.out[1]) ? 1.0 : 0.0;
    case Kind::Gatherer: return v.out[0] == ((v.in[0] << g.width) | v.in[1]) ? 1.0 : 0.0;
    case Kind::Star: return std::exp2(-0.25);
    case Kind::FunctionArrow:
    case Kind::RedArrow:
    case Kind::YellowArrow: {
      Word x = 0;
      for (const Word w : v.in) x = (x << (g.fanned ? 1 : g.arrow_in_bits())) | w;
      Word y = 0;
      for (const Word w : v.out) y = (y << (g.fanned ? 1 : g.arrow_out_bits())) | w;
      Word fx = 0;
      const int n = g.arrow_in_bits();
      const int m = g.arrow_out_bits();
      if (g.kind == Kind::FunctionArrow) {
        fx = g.function(x);
      } else if (g.kind == Kind::RedArrow) {
        for (int i = 0; i < m; ++i) fx = (fx << 1) | static_cast<Word>(parity(g.red_matrix.row(i) & x));
      } else {
        for (int i = 0; i < m; ++i) {
          const Word row = g.yellow_matrix.row_words()[static_cast<std::size_t>(i)];
          fx = (fx << 1) | static_cast<Word>((row & x) == row);
        }
      }
      return y == fx ? std::exp2((m - n) / 4.0) : 0.0;
    }
    default: throw std::logic_error("brute force: impure node");
  }
}

// Generic brute-force sum. `layers` = 1 for pure, 2 for doubled evaluation.
CMatrix brute_force(const Diagram& d, bool doubled_eval) {
  const int layers = doubled_eval ? 2 : 1;
  const auto edges = d.edges();
  const int in_bits = d.inputs().size();
  const int out_bits = d.outputs().size();
  // Bit offset of each boundary slot.
  std::vector<int> in_off;
  std::vector<int> out_off;
  int acc = 0;
  for (int w : d.inputs().widths()) {
    in_off.push_back(acc);
    acc += w;
  }
  acc = 0;
  for (int w : d.outputs().widths()) {
    out_off.push_back(acc);
    acc += w;
  }
  // Free edges: those with no boundary end.
  std::vector<int> free_edges;
  int free_bits = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edges[i].first.is_boundary() && !edges[i].second.is_boundary()) {
      free_edges.push_back(static_cast<int>(i));
      free_bits += d.width(edges[i].first);
    }
  }
  if ((free_bits + in_bits + out_bits) * layers > 14) throw std::runtime_error("brute force: too many bits");
  const Eigen::Index dim_out = Eigen::Index{1} << (out_bits * layers);
  const Eigen::Index dim_in = Eigen::Index{1} << (in_bits * layers);
  CMatrix result = CMatrix::Zero(dim_out, dim_in);

  auto boundary_value = [&](Endpoint e, Word row, Word col) -> Word {
    const int w = d.width(e);
    if (e.out) return (row >> (out_bits - out_off[e.index] - w)) & ((Word{1} << w) - 1);
    return (col >> (in_bits - in_off[e.index] - w)) & ((Word{1} << w) - 1);
  };

  for (Eigen::Index r = 0; r < dim_out; ++r) {
    for (Eigen::Index c = 0; c < dim_in; ++c) {
      // Split the doubled indices into layer values: (B, A) with B the high half.
      Word row_l[2] = {static_cast<Word>(r), 0};
      Word col_l[2] = {static_cast<Word>(c), 0};
      if (layers == 2) {
        row_l[0] = static_cast<Word>(r) & ((Word{1} << out_bits) - 1);
        row_l[1] = static_cast<Word>(r) >> out_bits;
        col_l[0] = static_cast<Word>(c) & ((Word{1} << in_bits) - 1);
        col_l[1] = static_cast<Word>(c) >> in_bits;
      }
      cd total = 0.0;
      const Word assignments = Word{1} << (free_bits * layers);
      for (Word a = 0; a < assignments; ++a) {
        cd value = 1.0;
        // Edge values per layer.
        std::map<Endpoint, Word> val[2];
        bool ok = true;
        Word cursor = a;
        for (int layer = 0; layer < layers && ok; ++layer) {
          for (int ei : free_edges) {
            const auto& [x, y] = edges[static_cast<std::size_t>(ei)];
            const int w = d.width(x);
            const Word bits = cursor & ((Word{1} << w) - 1);
            cursor >>= w;
            val[layer][x] = bits;
            val[layer][y] = bits;
          }
          for (const auto& [x, y] : edges) {
            if (!x.is_boundary() && !y.is_boundary()) continue;
            if (x.is_boundary() && y.is_boundary()) {
              if (boundary_value(x, row_l[layer], col_l[layer]) != boundary_value(y, row_l[layer], col_l[layer])) ok = false;
              continue;
            }
            const Endpoint b = x.is_boundary() ? x : y;
            const Endpoint n = x.is_boundary() ? y : x;
            val[layer][n] = boundary_value(b, row_l[layer], col_l[layer]);
          }
        }
        if (!ok) continue;
        for (const auto& [id, g] : d.nodes()) {
          if (!g.is_pure()) {
            // The two copies of the port must agree (trace / diagonal).
            const Endpoint p{id, g.kind == Kind::Mix, 0};
            if (val[0][p] != val[1][p]) {
              value = 0.0;
              break;
            }
            continue;
          }
          for (int layer = 0; layer < layers; ++layer) {
            PortValues pv;
            for (int i = 0; i < static_cast<int>(g.in_widths().size()); ++i) pv.in.push_back(val[layer][Endpoint::in_port(id, i)]);
            for (int i = 0; i < static_cast<int>(g.out_widths().size()); ++i) pv.out.push_back(val[layer][Endpoint::out_port(id, i)]);
            const cd nv = node_value(g, pv);
            value *= layer == 1 ? std::conj(nv) : nv;
          }
          if (value == 0.0) break;
        }
        total += value;
      }
      result(r, c) = total;
    }
  }
  return result;
}

}  // namespace

CMatrix brute_force_pure(const Diagram& d) { return brute_force(d, false); }

CMatrix brute_force_cpm(const Diagram& d) { return brute_force(d, true); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix doubled(const CMatrix& v) { return kron(v.conjugate(), v); }

CMatrix gate_table(const std::string& name) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix m;
  if (name == "H") {
    m.resize(2, 2);
    m << s, s, s, -s;
  } else if (name == "Not") {
    m.resize(2, 2);
    m << 0, 1, 1, 0;
  } else if (name == "Z") {
    m.resize(2, 2);
    m << 1, 0, 0, -1;
  } else if (name == "Swap") {
    m.resize(4, 4);
    m << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  } else if (name == "CNot") {
    m.resize(4, 4);
    m << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  } else if (name == "CZ") {
    m = CMatrix::Identity(4, 4);
    m(3, 3) = -1;
  } else if (name == "Toffoli") {
    m = CMatrix::Identity(8, 8);
    m(6, 6) = 0;
    m(7, 7) = 0;
    m(6, 7) = 1;
    m(7, 6) = 1;
  } else {
    throw std::invalid_argument(name);
  }
  return m;
}

CMatrix state_density(const std::string& name) {
  CMatrix m(2, 2);
  if (name == "0") m << 1, 0, 0, 0;
  else if (name == "1") m << 0, 0, 0, 1;
  else if (name == "+") m << 0.5, 0.5, 0.5, 0.5;
  else if (name == "-") m << 0.5, -0.5, -0.5, 0.5;
  else throw std::invalid_argument(name);
  return m;
}

CMatrix function_matrix(const BooleanFunction& f) {
  CMatrix m = CMatrix::Zero(Eigen::Index{1} << f.m(), Eigen::Index{1} << f.n());
  for (Word x = 0; x < (Word{1} << f.n()); ++x) m(static_cast<Eigen::Index>(f(x)), static_cast<Eigen::Index>(x)) = 1.0;
  return m * std::exp2((f.m() - f.n()) / 4.0);
}

BooleanFunction random_function(std::mt19937_64& rng, int n, int m) {
  std::vector<Word> table(std::size_t{1} << n);
  std::uniform_int_distribution<Word> dist(0, (Word{1} << m) - 1);
  for (auto& t : table) t = dist(rng);
  return BooleanFunction(n, m, table);
}

double random_phase(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 7);
  if (std::uniform_int_distribution<int>(0, 1)(rng)) return d(rng) * kPi / 4;
  return std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
}

namespace {

// A random generator with all ports of width `w` or arrow ports.
Diagram random_piece(std::mt19937_64& rng, int w, bool allow_discard) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<double> ph;
  for (int j = 0; j < w; ++j) ph.push_back(random_phase(rng));
  const int choice = pick(0, allow_discard ? 9 : 8);
  switch (choice) {
    case 0: return from_generator(Generator::green(w, pick(0, 2), pick(0, 2), ph));
    case 1: return from_generator(Generator::red(w, pick(0, 2), pick(0, 2), ph));
    case 2: {
      std::vector<cd> labels;
      for (int j = 0; j < w; ++j) labels.push_back(std::polar(1.0, random_phase(rng)));
      return from_generator(Generator::hbox(w, pick(0, 2), pick(0, 2), labels));
    }
    case 3: return w > 1 ? divider(w - 1) : from_generator(Generator::identity(1));
    case 4: return w > 1 ? gatherer(w - 1) : from_generator(Generator::star());
    case 5: return from_generator(Generator::swap(w, pick(1, 2)));
    case 6: return pick(0, 1) ? cup(w) : cap(w);
    case 7: return from_generator(Generator::function_arrow(random_function(rng, w, pick(1, 2))));
    case 8: return from_generator(Generator::star());
    default: return pick(0, 1) ? from_generator(Generator::discard(w)) : from_generator(Generator::mix(w));
  }
}

}  // namespace

Diagram random_diagram(std::mt19937_64& rng, int max_nodes, bool allow_discard) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto bits = [](const Diagram& x) { return x.inputs().size() + x.outputs().size(); };
  Diagram d = random_piece(rng, pick(1, 2), allow_discard);
  for (int attempt = 0; attempt < 40 && static_cast<int>(d.node_count()) < max_nodes; ++attempt) {
    Diagram p = random_piece(rng, pick(1, 2), allow_discard);
    Diagram next;
    // Compose when the new piece can consume existing outputs, else tensor.
    if (!d.outputs().empty() && p.inputs() == d.outputs()) {
      next = compose(d, p);
    } else if (!d.outputs().empty() && p.inputs().length() == 1 &&
               d.outputs()[d.outputs().length() - 1] == p.inputs()[0]) {
      // Apply p to the last output wire.
      std::vector<int> head(d.outputs().widths().begin(), d.outputs().widths().end() - 1);
      next = compose(d, tensor(identity(TypeList(head)), p));
    } else {
      next = tensor(d, p);
    }
    if (bits(next) <= 5) d = next;
  }
  return d;
}

}  // namespace szx::oracle
