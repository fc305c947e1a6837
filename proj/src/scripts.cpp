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

#include "szx/scripts.hpp"

#include <numbers>
#include <set>

#include "szx/algorithms.hpp"
#include "szx/match.hpp"
#include "szx/oracles.hpp"
#include "szx/scalable.hpp"

namespace szx {

namespace {

constexpr double kPi = std::numbers::pi;

using E = Endpoint;

RuleParams spider(Kind kind, int width, int n, int m, int q) {
  RuleParams p;
  p.kind = kind;
  p.width = width;
  p.n = n;
  p.m = m;
  p.q = q;
  return p;
}

RuleParams with_function(const BooleanFunction& f) {
  RuleParams p;
  p.f = f;
  return p;
}

RuleParams with_width(Kind kind, int width) {
  RuleParams p;
  p.kind = kind;
  p.width = width;
  return p;
}

Anchor at(std::map<NodeId, NodeId> nodes, std::vector<std::optional<Endpoint>> boundary = {}) {
  return Anchor{std::move(nodes), std::move(boundary)};
}

// Nodes of `d` satisfying `pred`, in id order.
template <typename Pred>
std::vector<NodeId> find_nodes(const Diagram& d, Pred pred) {
  std::vector<NodeId> out;
  for (const auto& [id, g] : d.nodes())
    if (pred(g)) out.push_back(id);
  return out;
}

template <typename Pred>
NodeId find_node(const Diagram& d, Pred pred) {
  const std::vector<NodeId> all = find_nodes(d, pred);
  if (all.size() != 1) throw SzxError(ErrorCode::InvalidArgument, "script construction: node lookup is ambiguous");
  return all.front();
}

Endpoint partner_of(const Diagram& d, Endpoint e) {
  const std::optional<Endpoint> p = d.partner(e);
  if (!p) throw SzxError(ErrorCode::InvalidArgument, "script construction: dangling endpoint " + to_string(e));
  return *p;
}

NodeId neighbour(const Diagram& d, Endpoint e) { return partner_of(d, e).node; }

std::vector<double> pi_bits(Word bits, int n) {
  std::vector<double> ph(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ph[static_cast<std::size_t>(j)] = kPi * word_bit(bits, j, n);
  return ph;
}

RuleParams red_pi(int n, int m) {
  RuleParams p;
  p.width = 1;
  p.n = n;
  p.m = m;
  p.phase = {kPi};
  return p;
}

}  // namespace

ProofScript oracle_involution_script(const BooleanFunction& f) {
  const int n = f.n();
  const int m = f.m();
  const Diagram u = quantum_oracle(f);
  // Node ids: copies 0 and 3, arrows 1 and 4, xors 2 and 5.
  ScriptBuilder b("oracle-involution", compose(u, u));
  b.describe("the quantum oracle is an involution");
  const auto lr = Direction::LeftToRight;
  const auto rl = Direction::RightToLeft;

  const NodeId fused = b.apply("fusion.green", spider(Kind::Green, n, 1, 1, 2), at({{0, 0}, {1, 3}}), lr,
                               "fuse the two copies")
                           .at(0);
  auto split = b.apply("fusion.green", spider(Kind::Green, n, 1, 1, 2), at({{0, fused}}, {E::input(0), E::output(0), E::in_port(1, 0), E::in_port(4, 0)}),
                       rl, "split off the leg pair feeding both arrows");
  const NodeId keep = split.at(0);
  const NodeId feed = split.at(1);
  auto pulled = b.apply("fn.copy", with_function(f), at({{0, feed}, {1, 1}, {2, 4}}), rl,
                        "one arrow followed by a copy");
  const NodeId arrow = pulled.at(0);
  const NodeId copy = pulled.at(1);

  const NodeId xor_fused = b.apply("fusion.red", spider(Kind::Red, m, 2, 0, 2), at({{0, 2}, {1, 5}}), lr,
                                   "fuse the two xors")
                               .at(0);
  auto xsplit = b.apply("fusion.red", spider(Kind::Red, m, 2, 0, 2),
                        at({{0, xor_fused}}, {E::out_port(copy, 0), E::out_port(copy, 1), E::input(1), E::output(1)}), rl,
                        "separate the copied legs from the ancilla wire");
  const NodeId xor_in = xsplit.at(0);
  const NodeId xor_through = xsplit.at(1);

  auto hopf = b.apply("hopf.green-red", with_width(Kind::Green, m), at({{0, copy}, {1, xor_in}}), lr,
                      "copy then xor disconnects");
  const NodeId erase = hopf.at(0);
  const NodeId unit = hopf.at(1);
  const NodeId erase_in = b.apply("fn.erase", with_function(f), at({{0, arrow}, {1, erase}}), lr,
                                  "erasing the arrow output erases its input")
                              .at(0);
  const NodeId g = b.apply("fusion.green", spider(Kind::Green, n, 1, 1, 0), at({{0, keep}, {1, erase_in}}), lr,
                           "absorb the erase")
                       .at(0);
  const NodeId r = b.apply("fusion.red", spider(Kind::Red, m, 0, 0, 2), at({{0, unit}, {1, xor_through}}), lr,
                           "absorb the red unit")
                       .at(0);
  b.apply("spider.identity", with_width(Kind::Green, n), at({{0, g}}), lr);
  b.apply("spider.identity", with_width(Kind::Red, m), at({{0, r}}), lr);
  return b.finish(identity(TypeList{n, m}));
}

ProofScript function_from_oracle_script(const BooleanFunction& f) {
  const int n = f.n();
  const int m = f.m();
  const auto lr = Direction::LeftToRight;
  ScriptBuilder b("function-from-oracle", function_from_oracle(quantum_oracle(f), n, m));
  b.describe("the quantum oracle with a red unit ancilla and an erased input is the function arrow");
  const Diagram& d0 = b.current();
  const NodeId unit = find_node(d0, [](const Generator& g) { return g.kind == Kind::Red && g.n_in + g.n_out == 1; });
  const NodeId xr = find_node(d0, [](const Generator& g) { return g.kind == Kind::Red && g.n_in + g.n_out == 3; });
  const NodeId copy = find_node(d0, [](const Generator& g) { return g.kind == Kind::Green && g.n_in + g.n_out == 3; });
  const NodeId erase = find_node(d0, [](const Generator& g) { return g.kind == Kind::Green && g.n_in + g.n_out == 1; });
  const NodeId r = b.apply("fusion.red", spider(Kind::Red, m, 0, 0, 2), at({{0, unit}, {1, xr}}), lr,
                           "the red unit is absorbed by the xor")
                       .at(0);
  b.apply("spider.identity", with_width(Kind::Red, m), at({{0, r}}), lr);
  const NodeId g = b.apply("fusion.green", spider(Kind::Green, n, 1, 1, 0), at({{0, copy}, {1, erase}}), lr,
                           "the erase is absorbed by the copy")
                       .at(0);
  b.apply("spider.identity", with_width(Kind::Green, n), at({{0, g}}), lr);
  return b.finish(function_arrow(f));
}

ProofScript diagonal_oracle_script(const BooleanFunction& f) {
  if (f.m() != 1) throw SzxError(ErrorCode::NotBoolean, "diagonal oracle needs one output bit");
  const int n = f.n();
  const auto lr = Direction::LeftToRight;
  const auto rl = Direction::RightToLeft;
  ScriptBuilder b("diagonal-oracle", diagonal_from_oracle(quantum_oracle(f), n));
  b.describe("the quantum oracle between |-> and <-| is the diagonal oracle");
  const Diagram& d0 = b.current();
  const NodeId xr = find_node(d0, [](const Generator& g) { return g.kind == Kind::Red; });
  const NodeId arrow = find_node(d0, [](const Generator& g) { return g.kind == Kind::FunctionArrow; });
  // The ancilla state feeds the xor; the effect (an adjoint, so also a
  // one-legged green spider) takes its output.
  const NodeId minus = neighbour(d0, E::in_port(xr, 1));
  const Endpoint effect_port = partner_of(d0, E::out_port(xr, 0));
  const NodeId minus_eff = effect_port.node;

  RuleParams xor_params;
  xor_params.width = 1;
  xor_params.n = 2;
  xor_params.m = 1;
  auto hs = b.apply("interact.h-red", xor_params,
                    at({{0, xr}}, {E::out_port(arrow, 0), E::out_port(minus, 0), effect_port}), lr,
                    "the xor as a green spider with Hadamard legs");
  const NodeId centre = hs.at(0);
  const NodeId h_arrow = hs.at(1);
  const NodeId h_state = hs.at(2);
  const NodeId h_effect = hs.at(3);

  const NodeId one_state =
      b.apply("interact.h-red", red_pi(0, 1), at({{0, minus}, {1, h_state}}), rl, "|-> through H is |1>").at(0);
  const NodeId one_effect =
      b.apply("interact.h-red", red_pi(1, 0), at({{0, minus_eff}, {1, h_effect}}), rl, "<-| through H is <1|").at(0);

  RuleParams basis;
  basis.width = 1;
  basis.x = 1;
  auto copies = b.apply("copy.basis", basis, at({{0, one_state}, {1, centre}}), lr, "copy the basis state");
  NodeId to_effect = copies.at(0);
  NodeId to_h = copies.at(1);
  if (neighbour(b.current(), E::out_port(to_effect, 0)) != one_effect) std::swap(to_effect, to_h);

  RuleParams fuse = spider(Kind::Red, 1, 0, 0, 0);
  fuse.phase = {kPi};
  fuse.phase2 = {kPi};
  const NodeId empty_red =
      b.apply("fusion.red", fuse, at({{0, to_effect}, {1, one_effect}}), lr, "<1|1> is a scalar").at(0);

  auto back = b.apply("interact.h-red", red_pi(0, 1), at({{0, to_h}}), lr, "|1> as H|->");
  const NodeId phase = back.at(0);
  const NodeId h_new = back.at(1);
  b.apply("hadamard.involution", RuleParams{}, at({{0, h_arrow}, {1, h_new}}, {E::out_port(arrow, 0), E::out_port(phase, 0)}), lr,
          "the two Hadamards cancel");

  const std::vector<NodeId> stars = find_nodes(b.current(), [](const Generator& g) { return g.kind == Kind::Star; });
  b.apply("scalar.cancel", with_width(Kind::Red, 1), at({{0, stars.at(0)}, {1, stars.at(1)}, {2, empty_red}}), lr,
          "the normalization stars cancel <1|1>");
  return b.finish(diagonal_oracle(f));
}

ProofScript bv_script(int n, Word s) {
  const BooleanFunction f = bv_function(s, n);
  const F2Matrix a(1, n, {s});
  const auto lr = Direction::LeftToRight;
  const auto rl = Direction::RightToLeft;
  ScriptBuilder b("bernstein-vazirani", build_bv(f));
  b.describe("the Bernstein-Vazirani circuit outputs |s>");
  b.admit("fn.linear");
  const Diagram& d0 = b.current();
  const NodeId zero = find_node(d0, [](const Generator& g) { return g.kind == Kind::Red && g.n_in + g.n_out == 1; });
  const NodeId minus = find_node(d0, [](const Generator& g) { return g.kind == Kind::Green && g.n_in + g.n_out == 1; });
  const NodeId copy = find_node(d0, [](const Generator& g) { return g.kind == Kind::Green && g.n_in + g.n_out == 3; });
  const NodeId fa = find_node(d0, [](const Generator& g) { return g.kind == Kind::FunctionArrow; });
  const NodeId xr = find_node(d0, [](const Generator& g) { return g.kind == Kind::Red && g.n_in + g.n_out == 3; });
  const NodeId discard = find_node(d0, [](const Generator& g) { return g.kind == Kind::Discard; });
  const std::vector<NodeId> layers = find_nodes(d0, [](const Generator& g) { return g.kind == Kind::HBox; });

  RuleParams lin;
  lin.f = f;
  lin.a = a;
  const NodeId arrow = b.apply("fn.linear", lin, at({{0, fa}}), lr, "f is linear with matrix s^T").at(0);

  RuleParams xor_params;
  xor_params.width = 1;
  xor_params.n = 2;
  xor_params.m = 1;
  auto hs = b.apply("interact.h-red", xor_params,
                    at({{0, xr}}, {E::out_port(arrow, 0), E::out_port(minus, 0), E::in_port(discard, 0)}), lr,
                    "the xor as a green spider with Hadamard legs");
  const NodeId centre = hs.at(0);
  const NodeId h_arrow = hs.at(1);
  const NodeId h_state = hs.at(2);
  const NodeId h_out = hs.at(3);
  const NodeId one = b.apply("interact.h-red", red_pi(0, 1), at({{0, minus}, {1, h_state}}), rl, "|-> through H is |1>").at(0);
  RuleParams iso;
  iso.variant = 1;
  iso.width = 1;
  const NodeId gone = b.apply("discard.isometry", iso, at({{0, h_out}, {1, discard}}), lr, "discarding after H").at(0);

  RuleParams basis;
  basis.width = 1;
  basis.x = 1;
  auto copies = b.apply("copy.basis", basis, at({{0, one}, {1, centre}}), lr, "copy the basis state");
  NodeId to_discard = copies.at(0);
  NodeId to_h = copies.at(1);
  if (neighbour(b.current(), E::out_port(to_discard, 0)) != gone) std::swap(to_discard, to_h);
  const NodeId star = find_nodes(b.current(), [](const Generator& g) { return g.kind == Kind::Star; }).back();
  RuleParams db;
  db.width = 1;
  db.x = 1;
  b.apply("discard.basis", db, at({{0, star}, {1, to_discard}, {2, gone}}), lr, "the ancilla is discarded");

  auto back = b.apply("interact.h-red", red_pi(0, 1), at({{0, to_h}}), lr, "|1> as H|->");
  const NodeId phase = back.at(0);
  b.apply("hadamard.involution", RuleParams{}, at({{0, h_arrow}, {1, back.at(1)}}, {E::out_port(arrow, 0), E::out_port(phase, 0)}),
          lr, "the two Hadamards cancel");

  RuleParams pull;
  pull.a = a;
  pull.x = 1;
  const NodeId kick = b.apply("red.phase", pull, at({{0, arrow}, {1, phase}}), lr, "phase kickback through s^T").at(0);

  RuleParams fuse = spider(Kind::Green, n, 1, 1, 0);
  fuse.phase = std::vector<double>(static_cast<std::size_t>(n), 0.0);
  fuse.phase2 = pi_bits(s, n);
  const NodeId z = b.apply("fusion.green", fuse, at({{0, copy}, {1, kick}}), lr, "the phase joins the copy").at(0);

  RuleParams hr;
  hr.width = n;
  hr.n = 1;
  hr.m = 1;
  hr.phase = pi_bits(s, n);
  const NodeId x = b.apply("interact.h-red", hr, at({{0, z}, {1, layers.at(0)}, {2, layers.at(1)}}), rl,
                           "H Z^s H is X^s")
                       .at(0);
  RuleParams fr = spider(Kind::Red, n, 0, 0, 1);
  fr.phase = std::vector<double>(static_cast<std::size_t>(n), 0.0);
  fr.phase2 = pi_bits(s, n);
  b.apply("fusion.red", fr, at({{0, zero}, {1, x}}), lr, "X^s|0> = |s>");
  return b.finish(basis_state_wide(s, n));
}

namespace {

std::set<NodeId> wiring_nodes(const Diagram& d) {
  std::set<NodeId> out;
  for (const auto& [id, g] : d.nodes())
    if (g.is_wiring()) out.insert(id);
  return out;
}

// The other leg of a two-legged node.
Endpoint other_leg(const Diagram& d, Endpoint e) {
  const Generator& g = d.node(e.node);
  std::vector<Endpoint> ports;
  for (int i = 0; i < g.n_in; ++i) ports.push_back(E::in_port(e.node, i));
  for (int j = 0; j < g.n_out; ++j) ports.push_back(E::out_port(e.node, j));
  if (ports.size() != 2) throw SzxError(ErrorCode::InvalidArgument, "script construction: chain node is not two-legged");
  return ports[0] == e ? ports[1] : ports[0];
}

// Entry and exit port of every node along the path from input 0 to output 0,
// where `next` maps an exit endpoint to the entry endpoint it is wired to.
template <typename Next>
std::vector<std::pair<Endpoint, Endpoint>> walk_chain(const Diagram& d, Next next) {
  std::vector<std::pair<Endpoint, Endpoint>> chain;
  Endpoint at = next(E::input(0));
  while (!at.is_boundary()) {
    const Endpoint exit = other_leg(d, at);
    chain.emplace_back(at, exit);
    if (chain.size() > d.node_count()) throw SzxError(ErrorCode::InvalidArgument, "script construction: chain loops");
    at = next(exit);
  }
  return chain;
}

RuleParams arachnid_params(const Generator& g, int width2) {
  RuleParams p;
  p.kind = g.kind;
  p.width = g.width;
  p.width2 = width2;
  p.n = 1;
  p.m = 1;
  p.phase = g.phases;
  p.label = g.labels;
  return p;
}

NodeId thick_node(const Diagram& d, int width) {
  return find_node(d, [width](const Generator& g) { return !g.is_wiring() && g.width == width; });
}

// Splits the single thickened arachnid of `d` into `copies` copies.
Application split_thickened(const Diagram& d, const Generator& f, int copies) {
  const NodeId t = thick_node(d, f.width * copies);
  return apply_rule(d, "thicken.dist", arachnid_params(f, copies),
                    at({{0, t}}, {partner_of(d, E::in_port(t, 0)), partner_of(d, E::out_port(t, 0))}),
                    Direction::RightToLeft);
}

}  // namespace

ProofScript iterate_base_script(const Diagram& f) {
  ScriptBuilder b("iterate-base", iterate(f, 0));
  b.describe("the iteration construction at k = 0 is f");
  const Extraction x = extract_subdiagram(b.current(), wiring_nodes(b.current()));
  RuleParams p;
  p.diagram = x.pattern;
  b.apply("wiring.coherence", p, x.anchor, Direction::LeftToRight, "collapse the boxing and shift wiring");
  return b.finish(f);
}

ProofScript iterate_step_script(const Diagram& f, int k) {
  if (k < 1) throw SzxError(ErrorCode::InvalidArgument, "induction step needs k >= 1");
  if (f.node_count() != 1 || !f.nodes().begin()->second.is_arachnid() || f.inputs() != f.outputs() ||
      f.inputs().length() != 1 || f.nodes().begin()->second.n_in != 1 || f.nodes().begin()->second.n_out != 1)
    throw SzxError(ErrorCode::InvalidArgument, "induction step script expects f to be a single 1 -> 1 arachnid");
  const Generator& fg = f.nodes().begin()->second;
  const auto lr = Direction::LeftToRight;
  const auto rl = Direction::RightToLeft;

  ScriptBuilder b("iterate-step-" + std::to_string(k), iterate(f, k));
  b.describe("the iteration construction at k equals f after the construction at k - 1");
  const NodeId t = thick_node(b.current(), fg.width * (k + 1));
  b.apply("thicken.dist", arachnid_params(fg, k + 1),
          at({{0, t}}, {partner_of(b.current(), E::in_port(t, 0)), partner_of(b.current(), E::out_port(t, 0))}), rl,
          "split the thickened f into copies");
  {
    const Extraction x = extract_subdiagram(b.current(), wiring_nodes(b.current()));
    RuleParams p;
    p.diagram = x.pattern;
    b.apply("wiring.coherence", p, x.anchor, lr, "the wiring connects the copies in a chain");
  }
  const Diagram chain_d = b.current();
  const auto chain = walk_chain(chain_d, [&](Endpoint e) { return partner_of(chain_d, e); });

  // The target, with its own thickened part split the same way.
  const Diagram end = compose(iterate(f, k - 1), f);
  Diagram split_end = end;
  std::map<NodeId, NodeId> split_ids;
  if (k - 1 >= 1) {
    Application a = split_thickened(end, fg, k);
    split_end = a.result;
    split_ids = a.inserted;
  }
  const Extraction y = extract_subdiagram(split_end, wiring_nodes(split_end));
  const Diagram nf = wiring_normal_form(y.pattern);
  if (nf.node_count() != 0) throw SzxError(ErrorCode::InvalidArgument, "script construction: wiring is not a plain chain");
  const std::vector<Endpoint> slots = boundary_slots(nf);
  std::map<Endpoint, Endpoint> mate;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Endpoint other = *nf.partner(slots[i]);
    const auto j = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), other) - slots.begin());
    mate[*y.anchor.boundary[i]] = *y.anchor.boundary[j];
  }
  const auto target_chain = walk_chain(split_end, [&](Endpoint e) {
    const auto it = mate.find(e);
    return it != mate.end() ? it->second : partner_of(split_end, e);
  });
  if (target_chain.size() != chain.size())
    throw SzxError(ErrorCode::InvalidArgument, "script construction: chain lengths differ");

  // Ports of the split target mapped onto the chain built so far.
  std::map<Endpoint, Endpoint> port_map;
  std::map<NodeId, NodeId> copy_map;
  port_map[E::input(0)] = E::input(0);
  port_map[E::output(0)] = E::output(0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    port_map[target_chain[i].first] = chain[i].first;
    port_map[target_chain[i].second] = chain[i].second;
    copy_map[target_chain[i].first.node] = chain[i].first.node;
  }
  Anchor rebuild;
  for (const auto& h : y.anchor.boundary) rebuild.boundary.push_back(port_map.at(*h));
  RuleParams p;
  p.diagram = y.pattern;
  const auto wiring = b.apply("wiring.coherence", p, rebuild, rl, "regroup the first k copies");

  if (k - 1 >= 1) {
    Anchor join;
    for (const auto& [pattern_id, end_id] : split_ids) {
      const auto w = wiring.find(end_id);
      join.nodes[pattern_id] = w != wiring.end() ? w->second : copy_map.at(end_id);
    }
    b.apply("thicken.dist", arachnid_params(fg, k), join, lr, "thicken the k copies back");
  }
  return b.finish(end);
}

std::vector<BundledScript> bundled_scripts() {
  const BooleanFunction or2(2, 1, {0, 1, 1, 1});
  const BooleanFunction wide(2, 2, {1, 3, 0, 2});
  const Diagram phase = from_generator(Generator::red(1, 1, 1, {kPi / 4}));
  const Diagram pair = from_generator(Generator::green(2, 1, 1, {kPi / 2, kPi}));
  std::vector<BundledScript> out;
  out.push_back({"oracle-involution.json", oracle_involution_script(or2)});
  out.push_back({"oracle-involution-wide.json", oracle_involution_script(wide)});
  out.push_back({"diagonal-oracle.json", diagonal_oracle_script(or2)});
  out.push_back({"function-from-oracle.json", function_from_oracle_script(wide)});
  out.push_back({"bernstein-vazirani.json", bv_script(3, 0b101)});
  out.push_back({"iterate-base.json", iterate_base_script(pair)});
  for (int k = 1; k <= 3; ++k)
    out.push_back({"iterate-step-" + std::to_string(k) + ".json", iterate_step_script(phase, k)});
  return out;
}

}  // namespace szx
