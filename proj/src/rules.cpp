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

#include <algorithm>
#include <numbers>
#include <numeric>

#include "szx/oracles.hpp"
#include "szx/rewrite.hpp"
#include "szx/scalable.hpp"

namespace szx {

namespace {

constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

Endpoint I(int i) { return Endpoint::input(i); }
Endpoint O(int i) { return Endpoint::output(i); }
Endpoint In(NodeId n, int i) { return Endpoint::in_port(n, i); }
Endpoint Out(NodeId n, int i) { return Endpoint::out_port(n, i); }

int uni(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::vector<double> random_phases(Rng& rng, int k) {
  std::vector<double> v(static_cast<std::size_t>(k));
  for (auto& a : v) {
    // Mix exact multiples of pi/4 with generic angles.
    a = coin(rng) ? kPi / 4 * uni(rng, 0, 7) : std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
  }
  return v;
}

std::vector<cd> random_labels(Rng& rng, int k) {
  std::vector<cd> v(static_cast<std::size_t>(k));
  std::normal_distribution<double> gauss;
  for (auto& a : v) a = coin(rng) ? cd(-1.0, 0.0) : cd(gauss(rng), gauss(rng));
  return v;
}

Word random_word(Rng& rng, int bits) {
  return bits == 0 ? 0 : std::uniform_int_distribution<Word>(0, (Word{1} << bits) - 1)(rng);
}

BooleanFunction random_function(Rng& rng, int n, int m) {
  std::vector<Word> t(std::size_t{1} << n);
  for (auto& v : t) v = random_word(rng, m);
  return BooleanFunction(n, m, t);
}

BooleanFunction random_balanced(Rng& rng, int n, int m) {
  std::vector<Word> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = x % (std::size_t{1} << m);
  std::shuffle(t.begin(), t.end(), rng);
  return BooleanFunction(n, m, t);
}

BooleanFunction random_injective(Rng& rng, int n, int m) {
  std::vector<Word> values(std::size_t{1} << m);
  std::iota(values.begin(), values.end(), Word{0});
  std::shuffle(values.begin(), values.end(), rng);
  values.resize(std::size_t{1} << n);
  return BooleanFunction(n, m, values);
}

F2Matrix random_f2(Rng& rng, int rows, int cols) {
  F2Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a.set(i, j, uni(rng, 0, 1));
  return a;
}

BoolMatrix random_bool(Rng& rng, int rows, int cols) {
  BoolMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a.set(i, j, uni(rng, 0, 1));
  return a;
}

TypeList random_composition(Rng& rng, int size) {
  std::vector<int> w;
  while (size > 0) {
    const int part = uni(rng, 1, size);
    w.push_back(part);
    size -= part;
  }
  return TypeList(w);
}

std::vector<int> random_perm(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

template <typename T>
std::vector<T> tile(const std::vector<T>& v, int times) {
  std::vector<T> out;
  for (int c = 0; c < times; ++c) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Kind random_kind(Rng& rng) {
  static constexpr Kind kinds[] = {Kind::Green, Kind::Red, Kind::HBox};
  return kinds[uni(rng, 0, 2)];
}

// Arachnid of the rule's colour; `second` selects phase2 (or the same labels).
Generator arachnid(const RuleParams& p, int k, int n, int m, bool second = false) {
  switch (p.kind) {
    case Kind::Green: return Generator::green(k, n, m, second ? p.phase2 : p.phase);
    case Kind::Red: return Generator::red(k, n, m, second ? p.phase2 : p.phase);
    case Kind::HBox: return Generator::hbox(k, n, m, p.label);
    default: throw SzxError(ErrorCode::InvalidArgument, "rule expects an arachnid kind");
  }
}

void fill_labels(Rng& rng, RuleParams& p, int k) {
  if (p.kind == Kind::HBox) {
    p.label = random_labels(rng, k);
  } else {
    p.phase = random_phases(rng, k);
  }
}

Diagram h_layer(int k) { return from_generator(Generator::hbox(k, 1, 1)); }

// Bitwise AND [k] (x) [k] -> [k].
Diagram and_gate(int k) { return compose(from_generator(Generator::hbox(k, 2, 1)), h_layer(k)); }

Diagram fanned_arrow(const BooleanFunction& f) {
  Generator g = Generator::function_arrow(f);
  g.fanned = true;
  return from_generator(g);
}

std::vector<double> pi_phases(Word bits, int n) {
  std::vector<double> ph(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ph[static_cast<std::size_t>(j)] = kPi * word_bit(bits, j, n);
  return ph;
}

Diagram red_state(Word bits, int n) { return from_generator(Generator::red(n, 0, 1, pi_phases(bits, n))); }

F2Matrix rows_of(const F2Matrix& a, int from, int to) {
  std::vector<Word> r(a.row_words().begin() + from, a.row_words().begin() + to);
  return F2Matrix(to - from, a.cols(), r);
}
F2Matrix cols_of(const F2Matrix& a, int from, int to) { return rows_of(a.transpose(), from, to).transpose(); }

BoolMatrix rows_of(const BoolMatrix& a, int from, int to) {
  std::vector<Word> r(a.row_words().begin() + from, a.row_words().begin() + to);
  return BoolMatrix(to - from, a.cols(), r);
}
BoolMatrix cols_of(const BoolMatrix& a, int from, int to) {
  BoolMatrix out(a.rows(), to - from);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = from; j < to; ++j) out.set(i, j - from, a.get(i, j));
  return out;
}

// Two arachnids joined by one leg: s1 n -> 1+m, s2 1 -> q, optionally with a
// Hadamard on the joining leg.
Diagram fused_pair(const Generator& s1, const Generator& s2, int k, int n, int m, int q, bool hadamard) {
  Diagram d(TypeList::repeat(k, n), TypeList::repeat(k, m + q));
  const NodeId a = d.add_node(s1);
  const NodeId b = d.add_node(s2);
  for (int i = 0; i < n; ++i) d.connect(I(i), In(a, i));
  if (hadamard) {
    const NodeId h = d.add_node(Generator::hbox(k, 1, 1));
    d.connect(Out(a, 0), In(h, 0));
    d.connect(Out(h, 0), In(b, 0));
  } else {
    d.connect(Out(a, 0), In(b, 0));
  }
  for (int j = 0; j < m; ++j) d.connect(Out(a, 1 + j), O(j));
  for (int j = 0; j < q; ++j) d.connect(Out(b, j), O(m + j));
  return d;
}

void sample_fusion_arities(Rng& rng, RuleParams& p) {
  p.width = uni(rng, 1, 3);
  p.n = uni(rng, 0, 2);
  p.m = uni(rng, 0, 2 - p.n);
  p.q = uni(rng, 0, std::min(2, 3 - p.n - p.m));
}

std::vector<double> add_phases(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

// Copy-major split of [k*l]^wires into l copies of [k]^wires, as a bit
// permutation for regroup.
std::vector<int> copy_split(int k, int l, int wires) {
  std::vector<int> perm(static_cast<std::size_t>(k * l * wires));
  for (int i = 0; i < wires; ++i)
    for (int c = 0; c < l; ++c)
      for (int b = 0; b < k; ++b) perm[static_cast<std::size_t>(i * k * l + c * k + b)] = (c * wires + i) * k + b;
  return perm;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

struct Registry {
  std::vector<RewriteRule> rules;

  void add(std::string name, std::string summary, std::string schema, std::function<Diagram(const RuleParams&)> lhs,
           std::function<Diagram(const RuleParams&)> rhs, std::function<RuleParams(Rng&)> sample,
           std::function<bool(const RuleParams&)> cond = {}, bool conditional = false) {
    rules.push_back(RewriteRule{std::move(name), std::move(summary), std::move(schema), std::move(lhs), std::move(rhs),
                                std::move(cond), std::move(sample), conditional});
  }
};

void add_arachnid_rules(Registry& r) {
  for (Kind kind : {Kind::Green, Kind::Red}) {
    const std::string colour = kind == Kind::Green ? "green" : "red";
    r.add(
        "fusion." + colour, "two " + colour + " spiders joined by a leg fuse, adding phases",
        "kind width n m q phase phase2",
        [kind](const RuleParams& p) {
          RuleParams c = p;
          c.kind = kind;
          return fused_pair(arachnid(c, p.width, p.n, 1 + p.m), arachnid(c, p.width, 1, p.q, true), p.width, p.n, p.m,
                            p.q, false);
        },
        [kind](const RuleParams& p) {
          RuleParams c = p;
          c.kind = kind;
          c.phase = add_phases(p.phase, p.phase2);
          return from_generator(arachnid(c, p.width, p.n, p.m + p.q));
        },
        [kind](Rng& rng) {
          RuleParams p;
          p.kind = kind;
          sample_fusion_arities(rng, p);
          p.phase = random_phases(rng, p.width);
          p.phase2 = random_phases(rng, p.width);
          return p;
        });
  }

  r.add(
      "fusion.hbox", "H-boxes with label -1 joined through a Hadamard fuse", "width n m q",
      [](const RuleParams& p) {
        return fused_pair(Generator::hbox(p.width, p.n, 1 + p.m), Generator::hbox(p.width, 1, p.q), p.width, p.n, p.m,
                          p.q, true);
      },
      [](const RuleParams& p) { return from_generator(Generator::hbox(p.width, p.n, p.m + p.q)); },
      [](Rng& rng) {
        RuleParams p;
        p.kind = Kind::HBox;
        sample_fusion_arities(rng, p);
        return p;
      });

  r.add(
      "flexsymmetry", "permuting the legs of an arachnid leaves it unchanged",
      "kind width n m variant(0: outputs, 1: inputs) perm phase|label",
      [](const RuleParams& p) {
        const Diagram s = from_generator(arachnid(p, p.width, p.n, p.m));
        if (p.variant == 0) return compose(s, permutation(TypeList::repeat(p.width, p.m), p.perm));
        return compose(permutation(TypeList::repeat(p.width, p.n), p.perm), s);
      },
      [](const RuleParams& p) { return from_generator(arachnid(p, p.width, p.n, p.m)); },
      [](Rng& rng) {
        RuleParams p;
        p.kind = random_kind(rng);
        p.width = uni(rng, 1, 3);
        p.variant = uni(rng, 0, 1);
        const int side = uni(rng, 2, 3);
        const int other = uni(rng, 0, 3 - side);
        p.n = p.variant ? side : other;
        p.m = p.variant ? other : side;
        p.perm = random_perm(rng, side);
        fill_labels(rng, p, p.width);
        return p;
      });

  r.add(
      "legbend", "an output leg bent by a cap becomes an input leg", "kind width n m phase|label",
      [](const RuleParams& p) {
        Diagram d(TypeList::repeat(p.width, p.n + 1), TypeList::repeat(p.width, p.m));
        const NodeId s = d.add_node(arachnid(p, p.width, p.n, p.m + 1));
        const NodeId c = d.add_node(Generator::cap(p.width));
        for (int i = 0; i < p.n; ++i) d.connect(I(i), In(s, i));
        for (int j = 0; j < p.m; ++j) d.connect(Out(s, j), O(j));
        d.connect(Out(s, p.m), In(c, 0));
        d.connect(I(p.n), In(c, 1));
        return d;
      },
      [](const RuleParams& p) { return from_generator(arachnid(p, p.width, p.n + 1, p.m)); },
      [](Rng& rng) {
        RuleParams p;
        p.kind = random_kind(rng);
        p.width = uni(rng, 1, 3);
        p.n = uni(rng, 0, 2);
        p.m = uni(rng, 0, 2 - p.n);
        fill_labels(rng, p, p.width);
        return p;
      });

  r.add(
      "split.arachnid", "an arachnid on [1+k] between gatherers and dividers splits into [1] and [k] arachnids",
      "kind width(k) n m phase|label (1+k entries)",
      [](const RuleParams& p) {
        const int k = p.width;
        std::vector<int> pair_in;
        std::vector<int> pair_out;
        for (int i = 0; i < p.n; ++i) pair_in.insert(pair_in.end(), {1, k});
        for (int j = 0; j < p.m; ++j) pair_out.insert(pair_out.end(), {1, k});
        Diagram d{TypeList(pair_in), TypeList(pair_out)};
        const NodeId s = d.add_node(arachnid(p, k + 1, p.n, p.m));
        for (int i = 0; i < p.n; ++i) {
          const NodeId g = d.add_node(Generator::gatherer(k));
          d.connect(I(2 * i), In(g, 0));
          d.connect(I(2 * i + 1), In(g, 1));
          d.connect(Out(g, 0), In(s, i));
        }
        for (int j = 0; j < p.m; ++j) {
          const NodeId v = d.add_node(Generator::divider(k));
          d.connect(Out(s, j), In(v, 0));
          d.connect(Out(v, 0), O(2 * j));
          d.connect(Out(v, 1), O(2 * j + 1));
        }
        return d;
      },
      [](const RuleParams& p) {
        const int k = p.width;
        std::vector<int> pair_in;
        std::vector<int> pair_out;
        for (int i = 0; i < p.n; ++i) pair_in.insert(pair_in.end(), {1, k});
        for (int j = 0; j < p.m; ++j) pair_out.insert(pair_out.end(), {1, k});
        Diagram d{TypeList(pair_in), TypeList(pair_out)};
        RuleParams head = p;
        RuleParams tail = p;
        if (p.kind == Kind::HBox) {
          head.label.assign(p.label.begin(), p.label.begin() + 1);
          tail.label.assign(p.label.begin() + 1, p.label.end());
        } else {
          head.phase.assign(p.phase.begin(), p.phase.begin() + 1);
          tail.phase.assign(p.phase.begin() + 1, p.phase.end());
        }
        const NodeId s1 = d.add_node(arachnid(head, 1, p.n, p.m));
        const NodeId s2 = d.add_node(arachnid(tail, k, p.n, p.m));
        for (int i = 0; i < p.n; ++i) {
          d.connect(I(2 * i), In(s1, i));
          d.connect(I(2 * i + 1), In(s2, i));
        }
        for (int j = 0; j < p.m; ++j) {
          d.connect(Out(s1, j), O(2 * j));
          d.connect(Out(s2, j), O(2 * j + 1));
        }
        return d;
      },
      [](Rng& rng) {
        RuleParams p;
        p.kind = random_kind(rng);
        p.width = uni(rng, 1, 2);
        p.n = uni(rng, 0, 2);
        p.m = uni(rng, p.n == 0 ? 1 : 0, 3 - p.n);
        if (p.n + p.m > 2) p.width = 1;
        fill_labels(rng, p, p.width + 1);
        return p;
      });

  r.add(
      "spider.identity", "a phase-free two-legged spider is the identity wire", "kind(green|red) width",
      [](const RuleParams& p) { return from_generator(arachnid(p, p.width, 1, 1)); },
      [](const RuleParams& p) { return identity(TypeList{p.width}); },
      [](Rng& rng) {
        RuleParams p;
        p.kind = coin(rng) ? Kind::Green : Kind::Red;
        p.width = uni(rng, 1, 3);
        p.phase.assign(static_cast<std::size_t>(p.width), 0.0);
        return p;
      },
      [](const RuleParams& p) {
        if (p.kind != Kind::Green && p.kind != Kind::Red) return false;
        return std::all_of(p.phase.begin(), p.phase.end(), [](double a) { return phases_close(a, 0); });
      });

  r.add(
      "hadamard.involution", "two Hadamards in a row cancel", "width",
      [](const RuleParams& p) { return compose(h_layer(p.width), h_layer(p.width)); },
      [](const RuleParams& p) { return identity(TypeList{p.width}); },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 3);
        return p;
      });

  r.add(
      "bialgebra.red-green", "a red merge followed by a green copy becomes a complete bipartite graph",
      "width p(red inputs) q(green outputs)",
      [](const RuleParams& p) {
        Diagram d(TypeList::repeat(p.width, p.p), TypeList::repeat(p.width, p.q));
        const NodeId red = d.add_node(Generator::red(p.width, p.p, 1));
        const NodeId green = d.add_node(Generator::green(p.width, 1, p.q));
        for (int i = 0; i < p.p; ++i) d.connect(I(i), In(red, i));
        d.connect(Out(red, 0), In(green, 0));
        for (int j = 0; j < p.q; ++j) d.connect(Out(green, j), O(j));
        return d;
      },
      [](const RuleParams& p) {
        Diagram d(TypeList::repeat(p.width, p.p), TypeList::repeat(p.width, p.q));
        std::vector<NodeId> greens;
        std::vector<NodeId> reds;
        for (int i = 0; i < p.p; ++i) greens.push_back(d.add_node(Generator::green(p.width, 1, p.q)));
        for (int j = 0; j < p.q; ++j) reds.push_back(d.add_node(Generator::red(p.width, p.p, 1)));
        for (int i = 0; i < p.p; ++i) {
          d.connect(I(i), In(greens[static_cast<std::size_t>(i)], 0));
          for (int j = 0; j < p.q; ++j)
            d.connect(Out(greens[static_cast<std::size_t>(i)], j), In(reds[static_cast<std::size_t>(j)], i));
        }
        for (int j = 0; j < p.q; ++j) d.connect(Out(reds[static_cast<std::size_t>(j)], 0), O(j));
        return d;
      },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 2);
        p.p = uni(rng, 1, 2);
        p.q = uni(rng, 1, 2);
        return p;
      });

  r.add(
      "hopf.green-red", "a green copy followed by a red merge disconnects", "width",
      [](const RuleParams& p) { return compose(green_copy(p.width), red_xor(p.width)); },
      [](const RuleParams& p) { return tensor(green_erase(p.width), from_generator(Generator::red(p.width, 0, 1))); },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 3);
        return p;
      });

  r.add(
      "interact.h-green", "the H-box AND gate commutes with green copying", "width",
      [](const RuleParams& p) { return compose(and_gate(p.width), green_copy(p.width)); },
      [](const RuleParams& p) {
        const int k = p.width;
        const Diagram copies = tensor(green_copy(k), green_copy(k));
        const Diagram cross = permutation(TypeList::repeat(k, 4), {0, 2, 1, 3});
        return compose_all({copies, cross, tensor(and_gate(k), and_gate(k))});
      },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 2);
        return p;
      });

  r.add(
      "interact.h-red", "a red spider is a green spider with a Hadamard on every leg", "width n m phase",
      [](const RuleParams& p) { return from_generator(Generator::red(p.width, p.n, p.m, p.phase)); },
      [](const RuleParams& p) {
        Diagram d(TypeList::repeat(p.width, p.n), TypeList::repeat(p.width, p.m));
        const NodeId s = d.add_node(Generator::green(p.width, p.n, p.m, p.phase));
        for (int i = 0; i < p.n; ++i) {
          const NodeId h = d.add_node(Generator::hbox(p.width, 1, 1));
          d.connect(I(i), In(h, 0));
          d.connect(Out(h, 0), In(s, i));
        }
        for (int j = 0; j < p.m; ++j) {
          const NodeId h = d.add_node(Generator::hbox(p.width, 1, 1));
          d.connect(Out(s, j), In(h, 0));
          d.connect(Out(h, 0), O(j));
        }
        return d;
      },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 2);
        p.n = uni(rng, 0, 2);
        p.m = uni(rng, 0, 3 - p.n);
        p.phase = random_phases(rng, p.width);
        return p;
      });

  r.add(
      "copy.basis", "a green copy duplicates a red basis state", "width x",
      [](const RuleParams& p) { return compose(red_state(p.x, p.width), green_copy(p.width)); },
      [](const RuleParams& p) { return tensor(red_state(p.x, p.width), red_state(p.x, p.width)); },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 3);
        p.x = random_word(rng, p.width);
        return p;
      });
}

void add_wiring_rules(Registry& r) {
  r.add(
      "div-gath.inverse", "dividers and gatherers are mutually inverse", "n variant(0: divide then gather, 1: gather then divide)",
      [](const RuleParams& p) {
        return p.variant == 0 ? compose(divider(p.n), gatherer(p.n)) : compose(gatherer(p.n), divider(p.n));
      },
      [](const RuleParams& p) { return identity(p.variant == 0 ? TypeList{p.n + 1} : TypeList{1, p.n}); },
      [](Rng& rng) {
        RuleParams p;
        p.n = uni(rng, 1, 2);
        p.variant = uni(rng, 0, 1);
        return p;
      });

  r.add(
      "rewire.coherence", "composites of rewirings are rewirings", "types_a types_b types_c (same size)",
      [](const RuleParams& p) { return compose(rewire(p.types_a, p.types_b), rewire(p.types_b, p.types_c)); },
      [](const RuleParams& p) { return rewire(p.types_a, p.types_c); },
      [](Rng& rng) {
        RuleParams p;
        const int s = uni(rng, 1, 3);
        p.types_a = random_composition(rng, s);
        p.types_b = random_composition(rng, s);
        p.types_c = random_composition(rng, s);
        return p;
      });

  r.add(
      "compact.snake", "a cup and a cap straighten to a wire", "width",
      [](const RuleParams& p) {
        Diagram d({p.width}, {p.width});
        const NodeId u = d.add_node(Generator::cup(p.width));
        const NodeId c = d.add_node(Generator::cap(p.width));
        d.connect(I(0), In(c, 1));
        d.connect(Out(u, 1), In(c, 0));
        d.connect(Out(u, 0), O(0));
        return d;
      },
      [](const RuleParams& p) { return identity(TypeList{p.width}); },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 3);
        return p;
      });

  r.add(
      "swap.involution", "two swaps in a row cancel", "width width2",
      [](const RuleParams& p) { return compose(swap({p.width}, {p.width2}), swap({p.width2}, {p.width})); },
      [](const RuleParams& p) { return identity({p.width, p.width2}); },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 3);
        p.width2 = uni(rng, 1, 3);
        return p;
      });

  r.add(
      "swap.cup", "a cup is symmetric", "width",
      [](const RuleParams& p) { return compose(cup(p.width), swap({p.width}, {p.width})); },
      [](const RuleParams& p) { return cup(p.width); },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 3);
        return p;
      });

  r.add(
      "wiring.coherence", "a wiring-only diagram equals its normal form", "diagram (wiring only)",
      [](const RuleParams& p) { return *p.diagram; }, [](const RuleParams& p) { return wiring_normal_form(*p.diagram); },
      [](Rng& rng) {
        RuleParams p;
        const int s = uni(rng, 1, 3);
        const TypeList a = random_composition(rng, s);
        const TypeList b = random_composition(rng, s);
        Diagram w = compose(rewire(a, b), permutation(b, random_perm(rng, static_cast<int>(b.length()))));
        w = compose(w, rewire(w.outputs(), random_composition(rng, s)));
        switch (uni(rng, 0, 3)) {
          case 1: w = tensor(w, compose(tensor(identity({1}), cup(1)), tensor(cap(1), identity({1})))); break;
          case 2: {
            const int k = uni(rng, 1, 2);
            w = tensor(w, compose(cup(k), cap(k)));
            break;
          }
          case 3: w = tensor(w, compose(tensor(cup(1), identity({1})), tensor(identity({1}), cap(1)))); break;
          default: break;
        }
        p.diagram = w;
        return p;
      },
      [](const RuleParams& p) { return p.diagram && is_wiring_only(*p.diagram); });

  r.add(
      "thicken.dist", "thickening a scaled arachnid by l scales it by l", "kind width(k) width2(l) n m phase|label",
      [](const RuleParams& p) {
        const int k = p.width;
        const int l = p.width2;
        std::vector<Diagram> copies;
        for (int c = 0; c < l; ++c) copies.push_back(from_generator(arachnid(p, k, p.n, p.m)));
        const Diagram pre = p.n ? regroup(TypeList::repeat(k * l, p.n), TypeList::repeat(k, p.n * l), copy_split(k, l, p.n))
                                : identity(TypeList{});
        const Diagram post = p.m ? regroup(TypeList::repeat(k, p.m * l), TypeList::repeat(k * l, p.m),
                                           inverse(copy_split(k, l, p.m)))
                                 : identity(TypeList{});
        return compose_all({pre, tensor_all(copies), post});
      },
      [](const RuleParams& p) {
        RuleParams t = p;
        t.phase = tile(p.phase, p.width2);
        t.label = tile(p.label, p.width2);
        return from_generator(arachnid(t, p.width * p.width2, p.n, p.m));
      },
      [](Rng& rng) {
        RuleParams p;
        p.kind = random_kind(rng);
        p.width = uni(rng, 1, 2);
        p.width2 = uni(rng, 2, 3);
        if (p.width * p.width2 > 3) p.width = 1;
        p.n = uni(rng, 0, 2);
        p.m = uni(rng, p.n == 0 ? 1 : 0, 3 - p.n);
        fill_labels(rng, p, p.width);
        return p;
      });

  r.add(
      "box.monoidal", "the box of a tensor product is the tensor of boxes between rewirings", "f g (fanned arrows)",
      [](const RuleParams& p) { return box(tensor(fanned_arrow(p.f), fanned_arrow(p.g))); },
      [](const RuleParams& p) {
        const int nf = p.f.n();
        const int ng = p.g.n();
        const int mf = p.f.m();
        const int mg = p.g.m();
        return compose_all({rewire({nf + ng}, {nf, ng}), tensor(box(fanned_arrow(p.f)), box(fanned_arrow(p.g))),
                            rewire({mf, mg}, {mf + mg})});
      },
      [](Rng& rng) {
        RuleParams p;
        p.f = random_function(rng, uni(rng, 1, 2), uni(rng, 1, 2));
        p.g = random_function(rng, uni(rng, 1, 2), uni(rng, 1, 2));
        return p;
      });
}

RuleParams sample_function(Rng& rng, int max_n = 3, int max_m = 3) {
  RuleParams p;
  p.f = random_function(rng, uni(rng, 1, max_n), uni(rng, 1, max_m));
  return p;
}

void add_function_rules(Registry& r) {
  r.add(
      "fn.apply", "a function arrow sends a red basis state to the basis state of its value", "f x",
      [](const RuleParams& p) { return compose(red_state(p.x, p.f.n()), function_arrow(p.f)); },
      [](const RuleParams& p) { return red_state(p.f(p.x), p.f.m()); },
      [](Rng& rng) {
        RuleParams p = sample_function(rng);
        p.x = random_word(rng, p.f.n());
        return p;
      });

  r.add(
      "fn.erase", "erasing the output of a function arrow erases its input", "f",
      [](const RuleParams& p) { return compose(function_arrow(p.f), green_erase(p.f.m())); },
      [](const RuleParams& p) { return green_erase(p.f.n()); }, [](Rng& rng) { return sample_function(rng); });

  r.add(
      "fn.copy", "copying the output of a function arrow copies its input", "f",
      [](const RuleParams& p) { return compose(function_arrow(p.f), green_copy(p.f.m())); },
      [](const RuleParams& p) { return compose(green_copy(p.f.n()), tensor(function_arrow(p.f), function_arrow(p.f))); },
      [](Rng& rng) { return sample_function(rng, 3, 2); });

  r.add(
      "fn.compose", "consecutive function arrows compose", "f g (g.n == f.m)",
      [](const RuleParams& p) { return compose(function_arrow(p.f), function_arrow(p.g)); },
      [](const RuleParams& p) { return function_arrow(p.f.then(p.g)); },
      [](Rng& rng) {
        RuleParams p = sample_function(rng);
        p.g = random_function(rng, p.f.m(), uni(rng, 1, 3));
        return p;
      },
      [](const RuleParams& p) { return p.f.m() == p.g.n(); });

  r.add(
      "fn.balanced", "a balanced function sends the green unit to the green unit (with scalar)", "f",
      [](const RuleParams& p) { return promise_diagrams(p.f, Promise::Balanced).first; },
      [](const RuleParams& p) { return promise_diagrams(p.f, Promise::Balanced).second; },
      [](Rng& rng) {
        RuleParams p;
        const int n = uni(rng, 1, 3);
        const int m = uni(rng, 1, std::min(n, 2));
        p.f = coin(rng, 0.8) ? random_balanced(rng, n, m) : random_function(rng, n, m);
        return p;
      },
      [](const RuleParams& p) { return is_balanced(p.f); }, true);

  r.add(
      "fn.injective", "an injective function commutes with green merging (with scalar)", "f",
      [](const RuleParams& p) { return promise_diagrams(p.f, Promise::Injective).first; },
      [](const RuleParams& p) { return promise_diagrams(p.f, Promise::Injective).second; },
      [](Rng& rng) {
        RuleParams p;
        const int n = uni(rng, 1, 2);
        const int m = uni(rng, n, 3);
        p.f = coin(rng, 0.8) ? random_injective(rng, n, m) : random_function(rng, n, m);
        return p;
      },
      [](const RuleParams& p) { return is_injective(p.f); }, true);

  r.add(
      "fn.linear", "a GF(2)-linear function arrow is the red arrow of its matrix", "f a",
      [](const RuleParams& p) { return function_arrow(p.f); }, [](const RuleParams& p) { return red_matrix_arrow(p.a); },
      [](Rng& rng) {
        RuleParams p;
        p.a = random_f2(rng, uni(rng, 1, 3), uni(rng, 1, 3));
        p.f = coin(rng, 0.8) ? p.a.to_function() : random_function(rng, p.a.cols(), p.a.rows());
        return p;
      },
      [](const RuleParams& p) { return p.f.n() == p.a.cols() && p.f.m() == p.a.rows() && p.f == p.a.to_function(); },
      true);

  r.add(
      "fn.constant", "a constant function arrow erases its input and prepares its value", "f",
      [](const RuleParams& p) { return function_arrow(p.f); },
      [](const RuleParams& p) { return tensor(green_erase(p.f.n()), red_state(p.f(0), p.f.m())); },
      [](Rng& rng) {
        RuleParams p;
        const int n = uni(rng, 1, 3);
        const int m = uni(rng, 1, 3);
        p.f = coin(rng, 0.8) ? BooleanFunction::constant(n, m, random_word(rng, m)) : random_function(rng, n, m);
        return p;
      },
      [](const RuleParams& p) { return is_constant(p.f); }, true);
}

RuleParams sample_matrix(Rng& rng, int min_rows = 1, int min_cols = 1) {
  RuleParams p;
  p.a = random_f2(rng, uni(rng, min_rows, 3), uni(rng, min_cols, 3));
  p.y = random_bool(rng, p.a.rows(), p.a.cols());
  p.variant = uni(rng, 0, 1);
  return p;
}

void add_matrix_rules(Registry& r) {
  r.add(
      "red.linear", "red arrows preserve the red unit (variant 0) and red merging (variant 1)", "a variant",
      [](const RuleParams& p) {
        const int n = p.a.cols();
        if (p.variant == 0) return compose(from_generator(Generator::red(n, 0, 1)), red_matrix_arrow(p.a));
        return compose(red_xor(n), red_matrix_arrow(p.a));
      },
      [](const RuleParams& p) {
        const int m = p.a.rows();
        if (p.variant == 0) return from_generator(Generator::red(m, 0, 1));
        return compose(tensor(red_matrix_arrow(p.a), red_matrix_arrow(p.a)), red_xor(m));
      },
      [](Rng& rng) { return sample_matrix(rng); });

  r.add(
      "red.rowsplit", "dividing the output of a red arrow splits its rows", "a (at least 2 rows)",
      [](const RuleParams& p) { return compose(red_matrix_arrow(p.a), divider(p.a.rows() - 1)); },
      [](const RuleParams& p) {
        const int m = p.a.rows();
        return compose(green_copy(p.a.cols()),
                       tensor(red_matrix_arrow(rows_of(p.a, 0, 1)), red_matrix_arrow(rows_of(p.a, 1, m))));
      },
      [](Rng& rng) { return sample_matrix(rng, 2, 1); }, [](const RuleParams& p) { return p.a.rows() >= 2; });

  r.add(
      "red.colsplit", "gathering the input of a red arrow splits its columns", "a (at least 2 columns)",
      [](const RuleParams& p) { return compose(gatherer(p.a.cols() - 1), red_matrix_arrow(p.a)); },
      [](const RuleParams& p) {
        const int n = p.a.cols();
        return compose(tensor(red_matrix_arrow(cols_of(p.a, 0, 1)), red_matrix_arrow(cols_of(p.a, 1, n))),
                       red_xor(p.a.rows()));
      },
      [](Rng& rng) { return sample_matrix(rng, 1, 2); }, [](const RuleParams& p) { return p.a.cols() >= 2; });

  r.add(
      "red.meta", "copy, matrix and merge diagrams agree exactly when Im(C;D) = Ker(A B)",
      "a(r x n1) b(r x n2) c(n1 x p) d(n2 x p)",
      [](const RuleParams& p) { return meta_rule_sides(p.a, p.b, p.c, p.d).first; },
      [](const RuleParams& p) { return meta_rule_sides(p.a, p.b, p.c, p.d).second; },
      [](Rng& rng) {
        RuleParams p;
        const int n1 = uni(rng, 1, 2);
        const int n2 = uni(rng, 1, 2);
        const int pp = uni(rng, 1, 2);
        p.c = random_f2(rng, n1, pp);
        p.d = random_f2(rng, n2, pp);
        // Choose (A B) with kernel Im(C;D): its rows span the annihilator.
        const F2Matrix cd = F2Matrix::vstack(p.c, p.d);
        const auto image = f2_image(cd);
        const auto annihilator = f2_kernel(F2Matrix(static_cast<int>(image.size()), n1 + n2, image));
        const int r = std::clamp<int>(static_cast<int>(annihilator.size()) + uni(rng, 0, 1), 1, 3);
        F2Matrix ab(r, n1 + n2);
        const bool satisfy = coin(rng, 0.8);
        for (int attempt = 0; attempt < 50; ++attempt) {
          for (int i = 0; i < r; ++i) {
            Word row = 0;
            if (satisfy) {
              for (Word v : annihilator)
                if (coin(rng)) row ^= v;
            } else {
              row = random_word(rng, n1 + n2);
            }
            for (int j = 0; j < n1 + n2; ++j) ab.set(i, j, word_bit(row, j, n1 + n2));
          }
          if (!satisfy || f2_rank(ab) == static_cast<int>(annihilator.size())) break;
        }
        p.a = cols_of(ab, 0, n1);
        p.b = cols_of(ab, n1, n1 + n2);
        return p;
      },
      [](const RuleParams& p) { return meta_rule_condition(p.a, p.b, p.c, p.d).holds; });

  r.add(
      "red.phase", "a pi-phase green effect pulled back through a red arrow", "a x(phase bits over rows)",
      [](const RuleParams& p) {
        const int m = p.a.rows();
        return compose(red_matrix_arrow(p.a), from_generator(Generator::green(m, 1, 0, pi_phases(p.x, m))));
      },
      [](const RuleParams& p) {
        const int n = p.a.cols();
        return from_generator(Generator::green(n, 1, 0, pi_phases(p.a.transpose().apply(p.x), n)));
      },
      [](Rng& rng) {
        RuleParams p = sample_matrix(rng);
        p.x = random_word(rng, p.a.rows());
        return p;
      });

  r.add(
      "red.hadamard", "a red arrow between Hadamard layers is the transposed arrow reversed", "a",
      [](const RuleParams& p) {
        return compose_all({h_layer(p.a.cols()), red_matrix_arrow(p.a), h_layer(p.a.rows())});
      },
      [](const RuleParams& p) { return transpose(red_matrix_arrow(p.a.transpose())); },
      [](Rng& rng) { return sample_matrix(rng); });

  r.add(
      "yellow.semimodule", "yellow arrows preserve the all-ones state (variant 0) and bitwise AND (variant 1)",
      "y variant",
      [](const RuleParams& p) {
        const int n = p.y.cols();
        if (p.variant == 0) return compose(red_state((Word{1} << n) - 1, n), yellow_matrix_arrow(p.y));
        return compose(and_gate(n), yellow_matrix_arrow(p.y));
      },
      [](const RuleParams& p) {
        const int m = p.y.rows();
        if (p.variant == 0) return red_state((Word{1} << m) - 1, m);
        return compose(tensor(yellow_matrix_arrow(p.y), yellow_matrix_arrow(p.y)), and_gate(m));
      },
      [](Rng& rng) { return sample_matrix(rng); });

  r.add(
      "yellow.rowsplit", "dividing the output of a yellow arrow splits its rows", "y (at least 2 rows)",
      [](const RuleParams& p) { return compose(yellow_matrix_arrow(p.y), divider(p.y.rows() - 1)); },
      [](const RuleParams& p) {
        const int m = p.y.rows();
        return compose(green_copy(p.y.cols()),
                       tensor(yellow_matrix_arrow(rows_of(p.y, 0, 1)), yellow_matrix_arrow(rows_of(p.y, 1, m))));
      },
      [](Rng& rng) { return sample_matrix(rng, 2, 1); }, [](const RuleParams& p) { return p.y.rows() >= 2; });

  r.add(
      "yellow.colsplit", "gathering the input of a yellow arrow splits its columns, joined by AND",
      "y (at least 2 columns)",
      [](const RuleParams& p) { return compose(gatherer(p.y.cols() - 1), yellow_matrix_arrow(p.y)); },
      [](const RuleParams& p) {
        const int n = p.y.cols();
        return compose(tensor(yellow_matrix_arrow(cols_of(p.y, 0, 1)), yellow_matrix_arrow(cols_of(p.y, 1, n))),
                       and_gate(p.y.rows()));
      },
      [](Rng& rng) { return sample_matrix(rng, 1, 2); }, [](const RuleParams& p) { return p.y.cols() >= 2; });
}

// Isometries used by discard.isometry.
Diagram isometry_instance(const RuleParams& p) {
  switch (p.variant) {
    case 0: return quantum_oracle(p.f);
    case 1: return h_layer(p.width);
    default: return function_arrow(p.f);
  }
}

Diagram discard_all(const TypeList& t) {
  std::vector<Diagram> parts;
  for (int w : t.widths()) parts.push_back(from_generator(Generator::discard(w)));
  return tensor_all(parts);
}

void add_cpm_rules(Registry& r) {
  r.add(
      "discard.isometry", "discarding after an isometry is discarding",
      "variant(0: oracle of f, 1: Hadamard layer of width, 2: bijective arrow f) f width",
      [](const RuleParams& p) {
        const Diagram u = isometry_instance(p);
        return compose(u, discard_all(u.outputs()));
      },
      [](const RuleParams& p) { return discard_all(isometry_instance(p).inputs()); },
      [](Rng& rng) {
        RuleParams p;
        p.variant = uni(rng, 0, 2);
        p.width = uni(rng, 1, 3);
        if (p.variant == 0) p.f = random_function(rng, uni(rng, 1, 2), uni(rng, 1, 2));
        if (p.variant == 2) {
          const int n = uni(rng, 1, 3);
          p.f = random_injective(rng, n, n);
        }
        return p;
      },
      [](const RuleParams& p) { return p.variant != 2 || (p.f.n() == p.f.m() && is_injective(p.f)); });

  r.add(
      "scalar.cancel", "two stars and an empty phase-free spider cancel", "kind(green|red)",
      [](const RuleParams& p) {
        Diagram d = empty_diagram();
        d.add_node(Generator::star());
        d.add_node(Generator::star());
        d.add_node(p.kind == Kind::Red ? Generator::red(1, 0, 0) : Generator::green(1, 0, 0));
        return d;
      },
      [](const RuleParams&) { return empty_diagram(); },
      [](Rng& rng) {
        RuleParams p;
        p.kind = coin(rng) ? Kind::Green : Kind::Red;
        return p;
      },
      [](const RuleParams& p) { return p.kind == Kind::Green || p.kind == Kind::Red; });

  r.add(
      "discard.basis", "discarding a normalized basis state leaves nothing", "width x",
      [](const RuleParams& p) {
        Diagram stars = empty_diagram();
        for (int i = 0; i < p.width; ++i) stars.add_node(Generator::star());
        return compose(tensor(stars, red_state(p.x, p.width)), discard_all({p.width}));
      },
      [](const RuleParams&) { return empty_diagram(); },
      [](Rng& rng) {
        RuleParams p;
        p.width = uni(rng, 1, 3);
        p.x = random_word(rng, p.width);
        return p;
      });
}

Registry build_registry() {
  Registry r;
  add_arachnid_rules(r);
  add_wiring_rules(r);
  add_function_rules(r);
  add_matrix_rules(r);
  add_cpm_rules(r);
  return r;
}

}  // namespace

const std::vector<RewriteRule>& rule_registry() {
  static const std::vector<RewriteRule> rules = build_registry().rules;
  return rules;
}

const RewriteRule& find_rule(std::string_view name) {
  for (const auto& r : rule_registry())
    if (r.name == name) return r;
  throw SzxError(ErrorCode::UnknownRule, std::string(name));
}

std::vector<RuleInfo> list_rules() {
  std::vector<RuleInfo> out;
  for (const auto& r : rule_registry()) out.push_back({r.name, r.summary, r.schema, r.conditional});
  return out;
}

}  // namespace szx
