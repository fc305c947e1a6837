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

#include "szx/scalable.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "szx/match.hpp"

namespace szx {

Diagram divider(int n) { return from_generator(Generator::divider(n)); }
Diagram gatherer(int n) { return from_generator(Generator::gatherer(n)); }

namespace {

TypeList ones(int n) { return TypeList::repeat(1, n); }

// t -> [1]^|t|, splitting each wire with a chain of dividers.
Diagram full_divide(const TypeList& t) {
  Diagram d(t, ones(t.size()));
  int out = 0;
  for (int i = 0; i < static_cast<int>(t.length()); ++i) {
    Endpoint cur = Endpoint::input(i);
    for (int w = t[static_cast<std::size_t>(i)]; w > 1; --w) {
      const NodeId v = d.add_node(Generator::divider(w - 1));
      d.connect(cur, Endpoint::in_port(v, 0));
      d.connect(Endpoint::out_port(v, 0), Endpoint::output(out++));
      cur = Endpoint::out_port(v, 1);
    }
    d.connect(cur, Endpoint::output(out++));
  }
  return d;
}

// [1]^|t| -> t, merging with a chain of gatherers.
Diagram full_gather(const TypeList& t) {
  Diagram d(ones(t.size()), t);
  int base = 0;
  for (int i = 0; i < static_cast<int>(t.length()); ++i) {
    const int w = t[static_cast<std::size_t>(i)];
    Endpoint cur = Endpoint::input(base + w - 1);
    for (int j = w - 2; j >= 0; --j) {
      const NodeId v = d.add_node(Generator::gatherer(w - 1 - j));
      d.connect(Endpoint::input(base + j), Endpoint::in_port(v, 0));
      d.connect(cur, Endpoint::in_port(v, 1));
      cur = Endpoint::out_port(v, 0);
    }
    d.connect(cur, Endpoint::output(i));
    base += w;
  }
  return d;
}

// Full division, a bit permutation (bit i goes to position perm[i]), then
// full gathering.

std::vector<int> iota(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TypeList unit_or(int size) { return size == 0 ? TypeList{} : TypeList{size}; }

// Replaces every node of `d` by a diagram. Each endpoint e of d is split into
// `parts(e)` sub-endpoints; an edge of d joins the i-th sub-endpoints of its
// ends. The replacement of node u has one input slot per sub-endpoint of its
// input ports (port order) and likewise for outputs. Edges are chased through
// slot-to-slot wires of the replacements; cycles left over become Cup/Cap
// loops.
Diagram substitute(const Diagram& d, const std::map<NodeId, Diagram>& repl,
                   const std::function<std::vector<int>(Endpoint)>& sub_widths) {
  auto slots_of = [&](const TypeList& t, bool out, NodeId node) {
    std::vector<int> widths;
    for (int i = 0; i < static_cast<int>(t.length()); ++i) {
      Endpoint e{node, out, i};
      for (int w : sub_widths(e)) widths.push_back(w);
    }
    return widths;
  };
  Diagram r(TypeList(slots_of(d.inputs(), false, Endpoint::kBoundary)),
            TypeList(slots_of(d.outputs(), true, Endpoint::kBoundary)));

  // Slot offset of each endpoint among the slots of its side.
  std::map<Endpoint, int> first_slot;
  auto assign_offsets = [&](NodeId node, int n_in, int n_out) {
    int off = 0;
    for (int i = 0; i < n_in; ++i) {
      first_slot[Endpoint{node, false, i}] = off;
      off += static_cast<int>(sub_widths(Endpoint{node, false, i}).size());
    }
    off = 0;
    for (int i = 0; i < n_out; ++i) {
      first_slot[Endpoint{node, true, i}] = off;
      off += static_cast<int>(sub_widths(Endpoint{node, true, i}).size());
    }
  };
  assign_offsets(Endpoint::kBoundary, static_cast<int>(d.inputs().length()), static_cast<int>(d.outputs().length()));
  std::map<NodeId, NodeId> offset;
  // (replacement node, slot) -> (endpoint of d, sub index)
  std::map<std::pair<NodeId, Endpoint>, std::pair<Endpoint, int>> slot_owner;
  for (const auto& [u, g] : d.nodes()) {
    const Diagram& ru = repl.at(u);
    offset[u] = r.next_id();
    for (const auto& [id, h] : ru.nodes()) r.add_node(offset[u] + id, h);
    assign_offsets(u, static_cast<int>(g.in_widths().size()), static_cast<int>(g.out_widths().size()));
    for (int out = 0; out < 2; ++out) {
      const int ports = static_cast<int>(out ? g.out_widths().size() : g.in_widths().size());
      for (int p = 0; p < ports; ++p) {
        const Endpoint e{u, out != 0, p};
        const int n = static_cast<int>(sub_widths(e).size());
        for (int i = 0; i < n; ++i)
          slot_owner[{u, Endpoint{Endpoint::kBoundary, out != 0, first_slot[e] + i}}] = {e, i};
      }
    }
  }

  std::set<std::pair<Endpoint, int>> visited;
  auto slot_of = [&](Endpoint e, int i) { return Endpoint{Endpoint::kBoundary, e.out, first_slot.at(e) + i}; };
  // Follows the d-edge at (e, i) to a real endpoint of r.
  std::function<Endpoint(Endpoint, int)> walk = [&](Endpoint e, int i) -> Endpoint {
    while (true) {
      visited.insert({e, i});
      const Endpoint q = *d.partner(e);
      visited.insert({q, i});
      if (q.is_boundary()) return slot_of(q, i);
      const Diagram& rv = repl.at(q.node);
      const Endpoint s = slot_of(q, i);
      const Endpoint t = *rv.partner(s);
      if (!t.is_boundary()) return Endpoint{t.node + offset.at(q.node), t.out, t.index};
      std::tie(e, i) = slot_owner.at({q.node, t});
    }
  };

  for (const Endpoint& s : boundary_slots(d)) {
    const int n = static_cast<int>(sub_widths(s).size());
    for (int i = 0; i < n; ++i) {
      const Endpoint here = slot_of(s, i);
      if (r.is_linked(here)) continue;
      r.connect(here, walk(s, i));
    }
  }
  for (const auto& [u, g] : d.nodes()) {
    const Diagram& ru = repl.at(u);
    for (const auto& [a, b] : ru.edges()) {
      if (a.is_boundary() && b.is_boundary()) continue;
      if (!a.is_boundary() && !b.is_boundary()) {
        r.connect(Endpoint{a.node + offset[u], a.out, a.index}, Endpoint{b.node + offset[u], b.out, b.index});
        continue;
      }
      const Endpoint slot = a.is_boundary() ? a : b;
      const Endpoint inner = a.is_boundary() ? b : a;
      const Endpoint here{inner.node + offset[u], inner.out, inner.index};
      if (r.is_linked(here)) continue;
      const auto [e, i] = slot_owner.at({u, slot});
      r.connect(here, walk(e, i));
    }
  }
  // Remaining sub-endpoints lie on closed loops.
  for (const auto& [u, g] : d.nodes()) {
    for (int out = 0; out < 2; ++out) {
      const int ports = static_cast<int>(out ? g.out_widths().size() : g.in_widths().size());
      for (int p = 0; p < ports; ++p) {
        const Endpoint e{u, out != 0, p};
        const auto widths = sub_widths(e);
        for (int i = 0; i < static_cast<int>(widths.size()); ++i) {
          if (visited.count({e, i})) continue;
          Endpoint cur = e;
          int ci = i;
          do {
            visited.insert({cur, ci});
            const Endpoint q = *d.partner(cur);
            visited.insert({q, ci});
            const Endpoint t = *repl.at(q.node).partner(slot_of(q, ci));
            std::tie(cur, ci) = slot_owner.at({q.node, t});
          } while (!(cur == e && ci == i));
          const int w = widths[static_cast<std::size_t>(i)];
          const NodeId c = r.add_node(Generator::cup(w));
          const NodeId k = r.add_node(Generator::cap(w));
          r.connect(Endpoint::out_port(c, 0), Endpoint::in_port(k, 0));
          r.connect(Endpoint::out_port(c, 1), Endpoint::in_port(k, 1));
        }
      }
    }
  }
  return r;
}

// Thickened ports of a generator, in order.
TypeList scaled(const std::vector<int>& widths, int k) {
  std::vector<int> w;
  for (int x : widths) w.push_back(x * k);
  return TypeList(w);
}

Diagram thicken_node(const Generator& g, int k) {
  if (k == 1) return from_generator(g);
  auto tile = [k](const auto& v) {
    std::remove_cvref_t<decltype(v)> out;
    for (int c = 0; c < k; ++c) out.insert(out.end(), v.begin(), v.end());
    return out;
  };
  switch (g.kind) {
    case Kind::Green: return from_generator(Generator::green(g.width * k, g.n_in, g.n_out, tile(g.phases)));
    case Kind::Red: return from_generator(Generator::red(g.width * k, g.n_in, g.n_out, tile(g.phases)));
    case Kind::HBox: return from_generator(Generator::hbox(g.width * k, g.n_in, g.n_out, tile(g.labels)));
    case Kind::Identity: return from_generator(Generator::identity(g.width * k));
    case Kind::Swap: return from_generator(Generator::swap(g.width * k, g.width2 * k));
    case Kind::Cup: return from_generator(Generator::cup(g.width * k));
    case Kind::Cap: return from_generator(Generator::cap(g.width * k));
    case Kind::Discard: return from_generator(Generator::discard(g.width * k));
    case Kind::Mix: return from_generator(Generator::mix(g.width * k));
    case Kind::Star: {
      Diagram d = empty_diagram();
      for (int c = 0; c < k; ++c) d.add_node(Generator::star());
      return d;
    }
    case Kind::Divider:
    case Kind::Gatherer: {
      const int n = g.width;
      // Copy c of the [n+1] wire occupies bits c(n+1) .. c(n+1)+n.
      std::vector<int> perm(static_cast<std::size_t>((n + 1) * k));
      for (int c = 0; c < k; ++c) {
        perm[static_cast<std::size_t>(c * (n + 1))] = c;
        for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(c * (n + 1) + 1 + j)] = k + c * n + j;
      }
      const TypeList whole{(n + 1) * k};
      const TypeList split{k, n * k};
      if (g.kind == Kind::Divider) return regroup(whole, split, perm);
      std::vector<int> inverse(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) inverse[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
      return regroup(split, whole, inverse);
    }
    case Kind::FunctionArrow:
    case Kind::RedArrow:
    case Kind::YellowArrow: {
      const int n = g.arrow_in_bits();
      const int m = g.arrow_out_bits();
      // Parallel copies of the arrow between copy-major regroupings.
      auto to_copies = [&](int bits) {
        std::vector<int> perm(static_cast<std::size_t>(bits * k));
        for (int c = 0; c < k; ++c)
          for (int j = 0; j < bits; ++j) {
            const int from = g.fanned ? j * k + c : c * bits + j;
            perm[static_cast<std::size_t>(from)] = c * bits + j;
          }
        return perm;
      };
      const TypeList per_copy_in = g.fanned ? ones(n) : unit_or(n);
      const TypeList per_copy_out = g.fanned ? ones(m) : unit_or(m);
      std::vector<int> mid_in;
      std::vector<int> mid_out;
      std::vector<Diagram> copies;
      for (int c = 0; c < k; ++c) {
        for (int w : per_copy_in.widths()) mid_in.push_back(w);
        for (int w : per_copy_out.widths()) mid_out.push_back(w);
        copies.push_back(from_generator(g));
      }
      const TypeList ins = scaled(g.in_widths(), k);
      const TypeList outs = scaled(g.out_widths(), k);
      Diagram body = tensor_all(copies);
      const std::vector<int> pin = to_copies(n);
      const std::vector<int> pout = to_copies(m);
      std::vector<int> pout_inv(pout.size());
      for (std::size_t i = 0; i < pout.size(); ++i) pout_inv[static_cast<std::size_t>(pout[i])] = static_cast<int>(i);
      Diagram pre = n ? regroup(ins, TypeList(mid_in), pin) : identity(TypeList{});
      Diagram post = m ? regroup(TypeList(mid_out), outs, pout_inv) : identity(TypeList{});
      return compose_all({pre, body, post});
    }
  }
  throw SzxError(ErrorCode::InvalidArgument, "thicken: unknown generator");
}

}  // namespace

Diagram regroup(const TypeList& in, const TypeList& out, const std::vector<int>& perm) {
  if (in.size() != out.size()) throw SzxError(ErrorCode::SizeMismatch, to_string(in) + " vs " + to_string(out));
  return compose_all({full_divide(in), permutation(ones(in.size()), perm), full_gather(out)});
}

Diagram rewire(const TypeList& a, const TypeList& b) { return regroup(a, b, iota(a.size())); }

Diagram box(const Diagram& d) {
  return compose_all({rewire(unit_or(d.inputs().size()), d.inputs()), d, rewire(d.outputs(), unit_or(d.outputs().size()))});
}

Diagram thicken(const Diagram& d, int k) {
  if (k < 1) throw SzxError(ErrorCode::InvalidArgument, "thickening factor must be >= 1");
  std::map<NodeId, Diagram> repl;
  for (const auto& [id, g] : d.nodes()) repl.emplace(id, thicken_node(g, k));
  return substitute(d, repl, [&](Endpoint e) { return std::vector<int>{d.width(e) * k}; });
}

namespace {

Diagram strip_node(const Generator& g) {
  const auto iw = g.in_widths();
  const auto ow = g.out_widths();
  const TypeList ins = ones(std::accumulate(iw.begin(), iw.end(), 0));
  const TypeList outs = ones(std::accumulate(ow.begin(), ow.end(), 0));
  Diagram d(ins, outs);
  auto link_slots = [&](Endpoint a, Endpoint b) { d.connect(a, b); };
  switch (g.kind) {
    case Kind::Green:
    case Kind::Red:
    case Kind::HBox: {
      const int k = g.width;
      for (int j = 0; j < k; ++j) {
        Generator s = g;
        s.width = 1;
        if (g.kind == Kind::HBox) s.labels = {g.labels[static_cast<std::size_t>(j)]};
        else s.phases = {g.phases[static_cast<std::size_t>(j)]};
        const NodeId v = d.add_node(s);
        for (int l = 0; l < g.n_in; ++l) d.connect(Endpoint::input(l * k + j), Endpoint::in_port(v, l));
        for (int l = 0; l < g.n_out; ++l) d.connect(Endpoint::out_port(v, l), Endpoint::output(l * k + j));
      }
      return d;
    }
    case Kind::FunctionArrow:
    case Kind::RedArrow:
    case Kind::YellowArrow: {
      Generator s = g;
      s.fanned = true;
      const NodeId v = d.add_node(s);
      for (int i = 0; i < s.arrow_in_bits(); ++i) d.connect(Endpoint::input(i), Endpoint::in_port(v, i));
      for (int i = 0; i < s.arrow_out_bits(); ++i) d.connect(Endpoint::out_port(v, i), Endpoint::output(i));
      return d;
    }
    case Kind::Discard:
      for (int i = 0; i < g.width; ++i) d.connect(Endpoint::input(i), Endpoint::in_port(d.add_node(Generator::discard(1)), 0));
      return d;
    case Kind::Mix:
      for (int i = 0; i < g.width; ++i) d.connect(Endpoint::out_port(d.add_node(Generator::mix(1)), 0), Endpoint::output(i));
      return d;
    case Kind::Star:
      d.add_node(g);
      return d;
    case Kind::Identity:
    case Kind::Divider:
    case Kind::Gatherer:
      for (int i = 0; i < static_cast<int>(ins.length()); ++i) link_slots(Endpoint::input(i), Endpoint::output(i));
      return d;
    case Kind::Swap:
      for (int i = 0; i < g.width; ++i) link_slots(Endpoint::input(i), Endpoint::output(g.width2 + i));
      for (int i = 0; i < g.width2; ++i) link_slots(Endpoint::input(g.width + i), Endpoint::output(i));
      return d;
    case Kind::Cup:
      for (int i = 0; i < g.width; ++i) link_slots(Endpoint::output(i), Endpoint::output(g.width + i));
      return d;
    case Kind::Cap:
      for (int i = 0; i < g.width; ++i) link_slots(Endpoint::input(i), Endpoint::input(g.width + i));
      return d;
  }
  throw SzxError(ErrorCode::InvalidArgument, "strip: unknown generator");
}

}  // namespace

Diagram strip(const Diagram& d) {
  std::map<NodeId, Diagram> repl;
  for (const auto& [id, g] : d.nodes()) repl.emplace(id, strip_node(g));
  return substitute(d, repl, [&](Endpoint e) { return std::vector<int>(static_cast<std::size_t>(d.width(e)), 1); });
}

bool is_wiring_only(const Diagram& d) {
  return std::all_of(d.nodes().begin(), d.nodes().end(), [](const auto& kv) { return kv.second.is_wiring(); });
}

Diagram wiring_normal_form(const Diagram& w) {
  if (!is_wiring_only(w)) throw SzxError(ErrorCode::InvalidArgument, "wiring_normal_form: diagram has non-wiring nodes");
  const Diagram s = strip(w);
  const auto slots = boundary_slots(w);
  // First stripped slot of every wire slot.
  std::vector<int> offset;
  std::map<Endpoint, std::pair<int, int>> owner;  // stripped slot -> (wire slot, bit)
  int in_bits = 0;
  int out_bits = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const int width = w.width(slots[i]);
    int& base = slots[i].out ? out_bits : in_bits;
    offset.push_back(base);
    for (int b = 0; b < width; ++b) {
      owner[Endpoint{Endpoint::kBoundary, slots[i].out, base + b}] = {static_cast<int>(i), b};
    }
    base += width;
  }
  bool direct = s.node_count() == 0;
  std::vector<int> mate(slots.size(), -1);
  for (std::size_t i = 0; direct && i < slots.size(); ++i) {
    const int width = w.width(slots[i]);
    for (int b = 0; b < width && direct; ++b) {
      const Endpoint e{Endpoint::kBoundary, slots[i].out, offset[i] + b};
      const auto [j, bj] = owner.at(*s.partner(e));
      if (j == static_cast<int>(i) || bj != b || w.width(slots[static_cast<std::size_t>(j)]) != width ||
          (mate[i] != -1 && mate[i] != j))
        direct = false;
      mate[i] = j;
    }
  }
  if (direct) {
    Diagram r(w.inputs(), w.outputs());
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (!r.is_linked(slots[i])) r.connect(slots[i], slots[static_cast<std::size_t>(mate[i])]);
    return r;
  }
  return compose_all({rewire(w.inputs(), ones(w.inputs().size())), s, rewire(ones(w.outputs().size()), w.outputs())});
}

Diagram block_shift(int block_width, int blocks) {
  std::vector<int> perm(static_cast<std::size_t>(block_width * blocks));
  for (int c = 0; c < blocks; ++c)
    for (int j = 0; j < block_width; ++j)
      perm[static_cast<std::size_t>(c * block_width + j)] = ((c + 1) % blocks) * block_width + j;
  const TypeList t{block_width * blocks};
  return regroup(t, t, perm);
}

Diagram iterate(const Diagram& f, int k) {
  if (f.inputs() != f.outputs())
    throw SzxError(ErrorCode::TypeMismatch, "iterate needs an endomorphism, got " + to_string(f.inputs()) + " -> " + to_string(f.outputs()));
  if (k < 0) throw SzxError(ErrorCode::InvalidArgument, "iteration count must be >= 0");
  const int a = f.inputs().size();
  if (a == 0) {
    // Scalars: the trace construction degenerates; use the plain product.
    return unroll(f, k);
  }
  const int blocks = k + 1;
  const Diagram m = compose(thicken(box(f), blocks), block_shift(a, blocks));
  Diagram core = m;
  if (k > 0) {
    const int rest = a * k;
    const TypeList one{a};
    const TypeList pair{a, rest};
    const TypeList whole{a * blocks};
    core = compose_all({
        tensor(identity(one), cup(rest)),
        tensor(rewire(pair, whole), identity(TypeList{rest})),
        tensor(m, identity(TypeList{rest})),
        tensor(rewire(whole, pair), identity(TypeList{rest})),
        tensor(identity(one), cap(rest)),
    });
  }
  return compose_all({rewire(f.inputs(), TypeList{a}), core, rewire(TypeList{a}, f.outputs())});
}

Diagram unroll(const Diagram& f, int k) {
  if (k < 0) throw SzxError(ErrorCode::InvalidArgument, "iteration count must be >= 0");
  Diagram r = f;
  for (int i = 0; i < k; ++i) r = compose(r, f);
  return r;
}

Diagram scalar_diagram(int quarter_exp) {
  Diagram d = empty_diagram();
  if (quarter_exp < 0) {
    for (int i = 0; i < -quarter_exp; ++i) d.add_node(Generator::star());
    return d;
  }
  const int greens = (quarter_exp + 1) / 2;
  for (int i = 0; i < greens; ++i) d.add_node(Generator::green(1, 0, 0));
  if (2 * greens > quarter_exp) d.add_node(Generator::star());
  return d;
}

}  // namespace szx
