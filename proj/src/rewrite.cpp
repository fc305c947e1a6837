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

#include "szx/rewrite.hpp"

#include <set>
#include <sstream>

#include "szx/match.hpp"

namespace szx {

std::string_view to_string(Direction d) { return d == Direction::LeftToRight ? "ltr" : "rtl"; }

Direction direction_from_string(std::string_view s) {
  if (s == "ltr" || s == "lr" || s == "forward") return Direction::LeftToRight;
  if (s == "rtl" || s == "rl" || s == "backward") return Direction::RightToLeft;
  throw SzxError(ErrorCode::ParseError, "unknown direction '" + std::string(s) + "'");
}

Anchor whole_anchor(const Diagram& side) {
  Anchor a;
  for (const auto& [id, g] : side.nodes()) a.nodes[id] = id;
  for (const Endpoint& s : boundary_slots(side)) a.boundary.push_back(s);
  return a;
}

Extraction extract_subdiagram(const Diagram& d, const std::set<NodeId>& nodes) {
  std::vector<std::pair<Endpoint, Endpoint>> in_cuts;  // (inner port, outer endpoint)
  std::vector<std::pair<Endpoint, Endpoint>> out_cuts;
  std::vector<std::pair<Endpoint, Endpoint>> inner;
  for (NodeId id : nodes) {
    if (!d.has_node(id)) throw SzxError(ErrorCode::AnchorMismatch, "no node " + std::to_string(id));
    for (const Endpoint& e : d.endpoints()) {
      if (e.node != id) continue;
      const auto q = d.partner(e);
      if (!q) throw SzxError(ErrorCode::ValidationFailed, "dangling port " + to_string(e));
      if (!q->is_boundary() && nodes.count(q->node)) {
        if (e < *q) inner.emplace_back(e, *q);
      } else if (q->is_boundary() ? !q->out : q->out) {
        in_cuts.emplace_back(e, *q);
      } else {
        out_cuts.emplace_back(e, *q);
      }
    }
  }
  std::vector<int> iw;
  std::vector<int> ow;
  for (const auto& c : in_cuts) iw.push_back(d.width(c.first));
  for (const auto& c : out_cuts) ow.push_back(d.width(c.first));
  Extraction ex;
  ex.pattern = Diagram(TypeList(iw), TypeList(ow));
  for (NodeId id : nodes) {
    ex.pattern.add_node(id, d.node(id));
    ex.anchor.nodes[id] = id;
  }
  for (const auto& [a, b] : inner) ex.pattern.connect(a, b);
  for (std::size_t i = 0; i < in_cuts.size(); ++i) {
    ex.pattern.connect(Endpoint::input(static_cast<int>(i)), in_cuts[i].first);
    ex.anchor.boundary.push_back(in_cuts[i].second);
  }
  for (std::size_t i = 0; i < out_cuts.size(); ++i) {
    ex.pattern.connect(Endpoint::output(static_cast<int>(i)), out_cuts[i].first);
    ex.anchor.boundary.push_back(out_cuts[i].second);
  }
  return ex;
}

Application apply_rule(const Diagram& d, const RewriteRule& rule, const RuleParams& params, const Anchor& anchor,
                       Direction dir) {
  if (!rule.condition_holds(params)) throw SzxError(ErrorCode::SideConditionFailed, rule.name);
  const bool forward = dir == Direction::LeftToRight;
  const Diagram from = forward ? rule.lhs(params) : rule.rhs(params);
  const Diagram to = forward ? rule.rhs(params) : rule.lhs(params);
  if (from.inputs() != to.inputs() || from.outputs() != to.outputs())
    throw SzxError(ErrorCode::ValidationFailed, rule.name + ": sides have different boundaries");

  const auto emb = embed(from, d, anchor.nodes, anchor.boundary);
  if (!emb) throw SzxError(ErrorCode::AnchorMismatch, rule.name + ": anchored subdiagram does not match");

  Application app;
  Diagram& r = app.result;
  r = d;
  const NodeId base = d.next_id();
  // Free the external endpoints, then drop the matched nodes.
  for (const Endpoint& x : emb->externals)
    if (r.is_linked(x)) r.disconnect(x);
  for (const auto& [p, t] : emb->nodes) r.remove_node(t);

  NodeId next = base;
  for (const auto& [id, g] : to.nodes()) {
    r.add_node(next, g);
    app.inserted[id] = next++;
  }
  const auto slots = boundary_slots(to);
  auto slot_of = [&](Endpoint e) {
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (slots[s] == e) return s;
    throw SzxError(ErrorCode::ValidationFailed, "unknown boundary slot");
  };
  auto place = [&](Endpoint e) {
    if (e.is_boundary()) return emb->externals[slot_of(e)];
    return Endpoint{app.inserted.at(e.node), e.out, e.index};
  };
  for (const auto& [a, b] : to.edges()) r.connect(place(a), place(b));
  return app;
}

Application apply_rule(const Diagram& d, std::string_view rule, const RuleParams& params, const Anchor& anchor,
                       Direction dir) {
  return apply_rule(d, find_rule(rule), params, anchor, dir);
}

SoundnessReport check_rule_soundness(const RewriteRule& rule, int trials, std::uint64_t seed, const Tolerance& tol) {
  SoundnessReport rep;
  rep.rule = rule.name;
  std::mt19937_64 rng(seed);
  const int max_draws = 20 * std::max(trials, 1);
  for (int draw = 0; draw < max_draws && rep.trials < trials; ++draw) {
    const RuleParams p = rule.sample(rng);
    if (!rule.condition_holds(p)) {
      ++rep.rejected;
      continue;
    }
    ++rep.trials;
    try {
      const Diagram l = rule.lhs(p);
      const Diagram r = rule.rhs(p);
      if (!validate(l).empty() || !validate(r).empty()) {
        rep.failures.push_back("instance " + std::to_string(draw) + ": malformed side");
        continue;
      }
      const double dist = semantic_distance(l, r);
      rep.max_distance = std::max(rep.max_distance, dist);
      if (!equal_semantics(l, r, tol)) {
        std::ostringstream msg;
        msg << "instance " << draw << ": sides differ by " << dist;
        rep.failures.push_back(msg.str());
      }
    } catch (const SzxError& e) {
      rep.failures.push_back("instance " + std::to_string(draw) + ": " + e.what());
    }
  }
  return rep;
}

}  // namespace szx
