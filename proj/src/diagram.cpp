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

#include "szx/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "szx/match.hpp"

namespace szx {

Diagram::Diagram(TypeList inputs, TypeList outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {}

const Generator& Diagram::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw SzxError(ErrorCode::InvalidArgument, "no node " + std::to_string(id));
  return it->second;
}

NodeId Diagram::add_node(Generator g) {
  const NodeId id = next_id();
  nodes_.emplace(id, std::move(g));
  return id;
}

void Diagram::add_node(NodeId id, Generator g) {
  if (id < 0 || nodes_.count(id)) throw SzxError(ErrorCode::InvalidArgument, "node id taken");
  nodes_.emplace(id, std::move(g));
}

void Diagram::remove_node(NodeId id) {
  const Generator& g = node(id);
  for (int i = 0; i < static_cast<int>(g.in_widths().size()); ++i) disconnect(Endpoint::in_port(id, i));
  for (int i = 0; i < static_cast<int>(g.out_widths().size()); ++i) disconnect(Endpoint::out_port(id, i));
  nodes_.erase(id);
}

bool Diagram::exists(Endpoint e) const {
  if (e.index < 0) return false;
  if (e.is_boundary()) {
    return e.out ? e.index < static_cast<int>(outputs_.length())
                 : e.index < static_cast<int>(inputs_.length());
  }
  auto it = nodes_.find(e.node);
  if (it == nodes_.end()) return false;
  const auto w = e.out ? it->second.out_widths() : it->second.in_widths();
  return e.index < static_cast<int>(w.size());
}

int Diagram::width(Endpoint e) const {
  if (!exists(e)) throw SzxError(ErrorCode::InvalidArgument, "no endpoint " + to_string(e));
  if (e.is_boundary()) return e.out ? outputs_[static_cast<std::size_t>(e.index)] : inputs_[static_cast<std::size_t>(e.index)];
  return nodes_.at(e.node).port_width(e.out, e.index);
}

void Diagram::connect(Endpoint a, Endpoint b) {
  if (a == b) throw SzxError(ErrorCode::InvalidArgument, "cannot link an endpoint to itself");
  const int wa = width(a);
  const int wb = width(b);
  if (wa != wb) {
    throw SzxError(ErrorCode::TypeMismatch, "edge " + to_string(a) + " -- " + to_string(b) +
                                                ": widths " + std::to_string(wa) + " vs " + std::to_string(wb));
  }
  if (links_.count(a) || links_.count(b))
    throw SzxError(ErrorCode::InvalidArgument, "endpoint already linked: " + to_string(links_.count(a) ? a : b));
  links_[a] = b;
  links_[b] = a;
}

void Diagram::disconnect(Endpoint a) {
  auto it = links_.find(a);
  if (it == links_.end()) return;
  const Endpoint b = it->second;
  links_.erase(it);
  links_.erase(b);
}

std::optional<Endpoint> Diagram::partner(Endpoint e) const {
  auto it = links_.find(e);
  if (it == links_.end()) return std::nullopt;
  return it->second;
}

std::vector<Endpoint> Diagram::endpoints() const {
  std::vector<Endpoint> out;
  for (int i = 0; i < static_cast<int>(inputs_.length()); ++i) out.push_back(Endpoint::input(i));
  for (int i = 0; i < static_cast<int>(outputs_.length()); ++i) out.push_back(Endpoint::output(i));
  for (const auto& [id, g] : nodes_) {
    for (int i = 0; i < static_cast<int>(g.in_widths().size()); ++i) out.push_back(Endpoint::in_port(id, i));
    for (int i = 0; i < static_cast<int>(g.out_widths().size()); ++i) out.push_back(Endpoint::out_port(id, i));
  }
  return out;
}

std::vector<std::pair<Endpoint, Endpoint>> Diagram::edges() const {
  std::vector<std::pair<Endpoint, Endpoint>> out;
  for (const auto& [a, b] : links_)
    if (a < b) out.emplace_back(a, b);
  return out;
}

bool Diagram::is_pure() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](const auto& kv) { return kv.second.is_pure(); });
}

bool Diagram::operator==(const Diagram& other) const {
  if (inputs_ != other.inputs_ || outputs_ != other.outputs_ || links_ != other.links_) return false;
  if (nodes_.size() != other.nodes_.size()) return false;
  for (const auto& [id, g] : nodes_) {
    auto it = other.nodes_.find(id);
    if (it == other.nodes_.end() || !g.same(it->second)) return false;
  }
  return true;
}

void Diagram::set_boundary(TypeList inputs, TypeList outputs) {
  inputs_ = std::move(inputs);
  outputs_ = std::move(outputs);
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::DanglingPort: return "DanglingPort";
    case Violation::WidthMismatch: return "WidthMismatch";
    case Violation::UnknownEndpoint: return "UnknownEndpoint";
    case Violation::BadGenerator: return "BadGenerator";
  }
  return "Unknown";
}

std::vector<ViolationReport> validate(const Diagram& d) {
  std::vector<ViolationReport> out;
  for (const auto& [id, g] : d.nodes()) {
    try {
      g.check();
    } catch (const SzxError& e) {
      out.push_back({Violation::BadGenerator, Endpoint{id, false, 0}, e.what()});
    }
  }
  for (const Endpoint& e : d.endpoints()) {
    if (!d.is_linked(e)) out.push_back({Violation::DanglingPort, e, "no edge at " + to_string(e)});
  }
  for (const auto& [a, b] : d.edges()) {
    if (!d.exists(a) || !d.exists(b)) {
      out.push_back({Violation::UnknownEndpoint, d.exists(a) ? b : a, "edge to a missing endpoint"});
      continue;
    }
    if (d.width(a) != d.width(b))
      out.push_back({Violation::WidthMismatch, a, to_string(a) + " -- " + to_string(b)});
  }
  return out;
}

namespace {

Endpoint shifted(Endpoint e, NodeId offset) {
  if (!e.is_boundary()) e.node += offset;
  return e;
}

void copy_nodes(Diagram& into, const Diagram& from, NodeId offset) {
  for (const auto& [id, g] : from.nodes()) into.add_node(id + offset, g);
}

}  // namespace

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.outputs() != g.inputs()) {
    throw SzxError(ErrorCode::TypeMismatch,
                   "compose: " + to_string(f.outputs()) + " vs " + to_string(g.inputs()));
  }
  const NodeId offset = f.next_id();
  Diagram r(f.inputs(), g.outputs());
  copy_nodes(r, f, 0);
  copy_nodes(r, g, offset);

  const int glued = static_cast<int>(f.outputs().length());
  std::vector<bool> visited(static_cast<std::size_t>(glued), false);

  // Follows an edge out of a real endpoint of f (side 0) or g (side 1)
  // through glued slots until it lands on another real endpoint.
  auto chase = [&](int side, Endpoint start) -> std::pair<int, Endpoint> {
    Endpoint p = side == 0 ? *f.partner(start) : *g.partner(start);
    while (true) {
      if (side == 0 && p.is_boundary() && p.out) {
        visited[static_cast<std::size_t>(p.index)] = true;
        side = 1;
        p = *g.partner(Endpoint::input(p.index));
      } else if (side == 1 && p.is_boundary() && !p.out) {
        visited[static_cast<std::size_t>(p.index)] = true;
        side = 0;
        p = *f.partner(Endpoint::output(p.index));
      } else {
        return {side, p};
      }
    }
  };
  auto lift = [&](int side, Endpoint e) {
    return side == 0 ? e : shifted(e, offset);  // f inputs and g outputs stay boundary slots
  };

  for (int side = 0; side < 2; ++side) {
    const Diagram& d = side == 0 ? f : g;
    for (const Endpoint& e : d.endpoints()) {
      if (side == 0 && e.is_boundary() && e.out) continue;
      if (side == 1 && e.is_boundary() && !e.out) continue;
      if (!d.is_linked(e)) continue;
      const Endpoint from = lift(side, e);
      if (r.is_linked(from)) continue;
      auto [to_side, to] = chase(side, e);
      r.connect(from, lift(to_side, to));
    }
  }
  // Closed loops made only of glued slots: a loop of width w is the scalar 2^w.
  for (int i = 0; i < glued; ++i) {
    if (visited[static_cast<std::size_t>(i)]) continue;
    int j = i;
    do {
      visited[static_cast<std::size_t>(j)] = true;
      Endpoint p = *g.partner(Endpoint::input(j));
      int k = p.index;
      visited[static_cast<std::size_t>(k)] = true;
      j = f.partner(Endpoint::output(k))->index;
    } while (j != i);
    const int w = f.outputs()[static_cast<std::size_t>(i)];
    const NodeId c = r.add_node(Generator::cup(w));
    const NodeId k = r.add_node(Generator::cap(w));
    r.connect(Endpoint::out_port(c, 0), Endpoint::in_port(k, 0));
    r.connect(Endpoint::out_port(c, 1), Endpoint::in_port(k, 1));
  }
  return r;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  const NodeId offset = f.next_id();
  Diagram r(f.inputs().concat(g.inputs()), f.outputs().concat(g.outputs()));
  copy_nodes(r, f, 0);
  copy_nodes(r, g, offset);
  const int fi = static_cast<int>(f.inputs().length());
  const int fo = static_cast<int>(f.outputs().length());
  for (const auto& [a, b] : f.edges()) r.connect(a, b);
  auto lift = [&](Endpoint e) {
    if (e.is_boundary()) {
      e.index += e.out ? fo : fi;
      return e;
    }
    return shifted(e, offset);
  };
  for (const auto& [a, b] : g.edges()) r.connect(lift(a), lift(b));
  return r;
}

Diagram compose_all(const std::vector<Diagram>& parts) {
  if (parts.empty()) return empty_diagram();
  Diagram r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = compose(r, parts[i]);
  return r;
}

Diagram tensor_all(const std::vector<Diagram>& parts) {
  Diagram r = empty_diagram();
  for (const auto& p : parts) r = tensor(r, p);
  return r;
}

Diagram empty_diagram() { return Diagram(TypeList{}, TypeList{}); }

Diagram identity(const TypeList& t) {
  Diagram d(t, t);
  for (int i = 0; i < static_cast<int>(t.length()); ++i) d.connect(Endpoint::input(i), Endpoint::output(i));
  return d;
}

Diagram from_generator(const Generator& g) {
  Diagram d(TypeList(g.in_widths()), TypeList(g.out_widths()));
  const NodeId id = d.add_node(g);
  for (int i = 0; i < static_cast<int>(g.in_widths().size()); ++i)
    d.connect(Endpoint::input(i), Endpoint::in_port(id, i));
  for (int i = 0; i < static_cast<int>(g.out_widths().size()); ++i)
    d.connect(Endpoint::out_port(id, i), Endpoint::output(i));
  return d;
}

Diagram permutation(const TypeList& t, const std::vector<int>& perm) {
  const std::size_t n = t.length();
  if (perm.size() != n) throw SzxError(ErrorCode::InvalidArgument, "permutation length");
  std::vector<int> out_widths(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int p = perm[i];
    if (p < 0 || p >= static_cast<int>(n) || seen[static_cast<std::size_t>(p)])
      throw SzxError(ErrorCode::InvalidArgument, "not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
    out_widths[static_cast<std::size_t>(p)] = t[i];
  }
  Diagram d(t, TypeList(out_widths));
  // cur[j]: the free endpoint currently carrying the wire at position j.
  std::vector<Endpoint> cur;
  std::vector<int> target(perm.begin(), perm.end());
  std::vector<int> widths = t.widths();
  for (std::size_t i = 0; i < n; ++i) cur.push_back(Endpoint::input(static_cast<int>(i)));
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (target[j] <= target[j + 1]) continue;
      const NodeId s = d.add_node(Generator::swap(widths[j], widths[j + 1]));
      d.connect(cur[j], Endpoint::in_port(s, 0));
      d.connect(cur[j + 1], Endpoint::in_port(s, 1));
      cur[j] = Endpoint::out_port(s, 0);
      cur[j + 1] = Endpoint::out_port(s, 1);
      std::swap(target[j], target[j + 1]);
      std::swap(widths[j], widths[j + 1]);
      moved = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) d.connect(cur[j], Endpoint::output(static_cast<int>(j)));
  return d;
}

Diagram swap(const TypeList& a, const TypeList& b) {
  std::vector<int> perm;
  const int na = static_cast<int>(a.length());
  const int nb = static_cast<int>(b.length());
  for (int i = 0; i < na; ++i) perm.push_back(nb + i);
  for (int i = 0; i < nb; ++i) perm.push_back(i);
  return permutation(a.concat(b), perm);
}

Diagram cup(int n) { return from_generator(Generator::cup(n)); }
Diagram cap(int n) { return from_generator(Generator::cap(n)); }

Diagram transpose(const Diagram& d) {
  Diagram r(d.outputs(), d.inputs());
  copy_nodes(r, d, 0);
  auto flip = [](Endpoint e) {
    if (e.is_boundary()) e.out = !e.out;
    return e;
  };
  for (const auto& [a, b] : d.edges()) r.connect(flip(a), flip(b));
  return r;
}

Diagram adjoint(const Diagram& d) {
  Diagram t = transpose(d);
  Diagram r(t.inputs(), t.outputs());
  for (const auto& [id, g] : t.nodes()) {
    Generator c = g;
    for (auto& p : c.phases) p = normalize_phase(-p);
    for (auto& l : c.labels) l = std::conj(l);
    r.add_node(id, c);
  }
  for (const auto& [a, b] : t.edges()) r.connect(a, b);
  return r;
}

std::vector<Endpoint> boundary_slots(const Diagram& d) {
  std::vector<Endpoint> out;
  for (int i = 0; i < static_cast<int>(d.inputs().length()); ++i) out.push_back(Endpoint::input(i));
  for (int i = 0; i < static_cast<int>(d.outputs().length()); ++i) out.push_back(Endpoint::output(i));
  return out;
}

namespace {

std::vector<Endpoint> ports_of(const Diagram& d, NodeId id) {
  std::vector<Endpoint> out;
  const Generator& g = d.node(id);
  for (int i = 0; i < static_cast<int>(g.in_widths().size()); ++i) out.push_back(Endpoint::in_port(id, i));
  for (int i = 0; i < static_cast<int>(g.out_widths().size()); ++i) out.push_back(Endpoint::out_port(id, i));
  return out;
}

int slot_index(const Diagram& d, Endpoint slot) {
  return slot.out ? static_cast<int>(d.inputs().length()) + slot.index : slot.index;
}

}  // namespace

std::optional<Embedding> embed(const Diagram& pattern, const Diagram& target,
                               const std::map<NodeId, NodeId>& nodes,
                               const std::vector<std::optional<Endpoint>>& hints) {
  const auto slots = boundary_slots(pattern);
  if (!hints.empty() && hints.size() != slots.size())
    throw SzxError(ErrorCode::AnchorMismatch, "boundary anchor has the wrong number of slots");
  if (nodes.size() != pattern.node_count()) return std::nullopt;

  std::set<NodeId> image;
  for (const auto& [p, t] : nodes) {
    if (!pattern.has_node(p) || !target.has_node(t)) return std::nullopt;
    if (!image.insert(t).second) return std::nullopt;
    if (!pattern.node(p).matches(target.node(t))) return std::nullopt;
  }
  auto is_external = [&](Endpoint e) { return e.is_boundary() || image.count(e.node) == 0; };

  std::vector<Endpoint> pports;
  for (const auto& [p, t] : nodes) {
    for (const Endpoint& e : ports_of(pattern, p)) pports.push_back(e);
  }

  Embedding result;
  result.nodes = nodes;
  result.externals.assign(slots.size(), Endpoint{});
  std::vector<bool> have_external(slots.size(), false);
  std::set<Endpoint> used;

  // Records the external endpoint of a slot when consistent with hints.
  auto try_external = [&](int s, Endpoint x) {
    if (!is_external(x)) return false;
    if (!hints.empty() && hints[static_cast<std::size_t>(s)] && *hints[static_cast<std::size_t>(s)] != x) return false;
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == pports.size()) return true;
    const Endpoint pp = pports[k];
    const NodeId tn = nodes.at(pp.node);
    const Generator& pg = pattern.node(pp.node);
    std::vector<Endpoint> candidates;
    if (pg.is_arachnid()) {
      for (const Endpoint& e : ports_of(target, tn))
        if (!used.count(e)) candidates.push_back(e);
    } else {
      Endpoint e{tn, pp.out, pp.index};
      if (!used.count(e)) candidates.push_back(e);
    }
    const auto pq = pattern.partner(pp);
    if (!pq) return false;
    for (const Endpoint& c : candidates) {
      if (target.width(c) != pattern.width(pp)) continue;
      const auto tq = target.partner(c);
      if (!tq) continue;
      int slot = -1;
      if (pq->is_boundary()) {
        slot = slot_index(pattern, *pq);
        if (!try_external(slot, *tq)) continue;
      } else {
        // Internal pattern edge: if the other end is already assigned the
        // images must be linked; otherwise the partner must be in the image.
        auto it = result.ports.find(*pq);
        if (it != result.ports.end()) {
          if (it->second != *tq) continue;
        } else if (is_external(*tq)) {
          continue;
        }
      }
      used.insert(c);
      result.ports[pp] = c;
      if (slot >= 0) {
        result.externals[static_cast<std::size_t>(slot)] = *tq;
        have_external[static_cast<std::size_t>(slot)] = true;
      }
      if (assign(k + 1)) return true;
      used.erase(c);
      result.ports.erase(pp);
      if (slot >= 0) have_external[static_cast<std::size_t>(slot)] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  // Internal edges whose far end was assigned later still need checking.
  for (const auto& [pp, tp] : result.ports) {
    const Endpoint pq = *pattern.partner(pp);
    if (pq.is_boundary()) continue;
    if (*target.partner(tp) != result.ports.at(pq)) return std::nullopt;
  }

  // Slot-to-slot wires of the pattern.
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto q = pattern.partner(slots[s]);
    if (!q || !q->is_boundary()) continue;
    const std::size_t t = static_cast<std::size_t>(slot_index(pattern, *q));
    if (hints.empty() || !hints[s] || !hints[t])
      throw SzxError(ErrorCode::AnchorMismatch, "a pass-through wire of the pattern needs a boundary anchor");
    if (!is_external(*hints[s]) || target.partner(*hints[s]) != *hints[t]) return std::nullopt;
    if (target.width(*hints[s]) != pattern.width(slots[s])) return std::nullopt;
    result.externals[s] = *hints[s];
    have_external[s] = true;
  }
  if (std::find(have_external.begin(), have_external.end(), false) != have_external.end()) return std::nullopt;
  return result;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) return false;
  if (a.node_count() != b.node_count()) return false;

  std::vector<std::optional<Endpoint>> hints;
  for (const Endpoint& s : boundary_slots(b)) hints.push_back(s);

  // Neighbouring nodes, used to order the search and restrict candidates.
  auto neighbours = [](const Diagram& d, NodeId id) {
    std::set<NodeId> out;
    for (const Endpoint& p : ports_of(d, id)) {
      auto q = d.partner(p);
      if (q && !q->is_boundary()) out.insert(q->node);
    }
    return out;
  };

  std::vector<NodeId> order;
  std::set<NodeId> placed;
  for (const auto& [id, g] : a.nodes()) {
    if (placed.count(id)) continue;
    std::vector<NodeId> queue{id};
    placed.insert(id);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (NodeId n : neighbours(a, queue[i]))
        if (placed.insert(n).second) queue.push_back(n);
    }
  }

  std::map<NodeId, NodeId> map;
  std::set<NodeId> taken;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == order.size()) return embed(a, b, map, hints).has_value();
    const NodeId u = order[k];
    std::set<NodeId> cands;
    bool constrained = false;
    for (NodeId n : neighbours(a, u)) {
      auto it = map.find(n);
      if (it == map.end()) continue;
      auto nb = neighbours(b, it->second);
      if (!constrained) {
        cands = nb;
        constrained = true;
      } else {
        std::set<NodeId> both;
        std::set_intersection(cands.begin(), cands.end(), nb.begin(), nb.end(), std::inserter(both, both.begin()));
        cands = both;
      }
    }
    if (!constrained)
      for (const auto& [id, g] : b.nodes()) cands.insert(id);
    for (NodeId v : cands) {
      if (taken.count(v)) continue;
      if (!a.node(u).matches(b.node(v))) continue;
      if (neighbours(a, u).size() != neighbours(b, v).size()) continue;
      map[u] = v;
      taken.insert(v);
      if (search(k + 1)) return true;
      map.erase(u);
      taken.erase(v);
    }
    return false;
  };
  return search(0);
}

}  // namespace szx
