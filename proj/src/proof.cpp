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
#include <set>

#include "szx/rewrite.hpp"
#include "szx/scalable.hpp"

namespace szx {

std::string_view to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Passed: return "passed";
    case StepStatus::UnknownRule: return "unknown-rule";
    case StepStatus::AxiomNotAdmitted: return "axiom-not-admitted";
    case StepStatus::AnchorMismatch: return "anchor-mismatch";
    case StepStatus::SideConditionFailed: return "side-condition-failed";
    case StepStatus::StructureMismatch: return "structure-mismatch";
    case StepStatus::SemanticMismatch: return "semantic-mismatch";
    case StepStatus::Skipped: return "skipped";
  }
  return "?";
}

bool ProofReport::passed() const {
  return end_structural && end_semantic &&
         std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.status == StepStatus::Passed; });
}

namespace {

// Quarter exponent of a scalar generator, if it is one.
std::optional<int> scalar_exponent(const Generator& g) {
  if (g.kind == Kind::Star) return -1;
  if (g.kind == Kind::Green && g.arity() == 0 &&
      std::all_of(g.phases.begin(), g.phases.end(), [](double a) { return phases_close(a, 0); }))
    return 2 * g.width;
  return std::nullopt;
}

void require_valid(const Diagram& d, const std::string& what) {
  const auto v = validate(d);
  if (!v.empty()) throw SzxError(ErrorCode::ValidationFailed, what + ": " + v.front().message);
}

bool matches_up_to_rewiring(const Diagram& a, const Diagram& b) {
  if (isomorphic(a, b)) return true;
  if (a.inputs().size() != b.inputs().size() || a.outputs().size() != b.outputs().size()) return false;
  // Strip both sides to width-1 wires, which removes all dividers and
  // gatherers.
  return isomorphic(strip(a), strip(b));
}

}  // namespace

Diagram apply_scalar_fix(const Diagram& d, int quarter_exp, const std::vector<NodeId>& remove) {
  if (remove.empty()) {
    Diagram r = d;
    const Diagram s = scalar_diagram(quarter_exp);
    NodeId next = d.next_id();
    for (const auto& [id, g] : s.nodes()) r.add_node(next++, g);
    return r;
  }
  Diagram r = d;
  int total = 0;
  for (NodeId id : remove) {
    if (!d.has_node(id)) throw SzxError(ErrorCode::AnchorMismatch, "scalar fix: no node " + std::to_string(id));
    const auto e = scalar_exponent(d.node(id));
    if (!e) throw SzxError(ErrorCode::AnchorMismatch, "scalar fix: node " + std::to_string(id) + " is not a scalar");
    total += *e;
    r.remove_node(id);
  }
  if (total != quarter_exp)
    throw SzxError(ErrorCode::AnchorMismatch, "scalar fix: removed scalars do not total 2^(" +
                                                  std::to_string(quarter_exp) + "/4)");
  return r;
}

ProofReport check_proof(const ProofScript& script, const Tolerance& tol) {
  require_valid(script.start, "start");
  require_valid(script.end, "end");
  for (const auto& ax : script.oracle_axioms) {
    try {
      find_rule(ax);
    } catch (const SzxError&) {
      throw SzxError(ErrorCode::ValidationFailed, "oracle axiom '" + ax + "' is not a registry rule");
    }
  }
  for (std::size_t i = 0; i < script.steps.size(); ++i)
    if (script.steps[i].expect) require_valid(*script.steps[i].expect, "step " + std::to_string(i) + " expected diagram");

  ProofReport rep;
  rep.name = script.name;
  std::optional<Diagram> cur = script.start;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const ProofStep& step = script.steps[i];
    StepReport sr;
    sr.index = static_cast<int>(i);
    sr.rule = step.type == ProofStep::Type::ScalarFix ? "scalar-fix" : step.rule;
    sr.scalar_fix = step.type == ProofStep::Type::ScalarFix;
    if (sr.scalar_fix) sr.quarter_exp = step.anchor.nodes.empty() ? step.quarter_exp : -step.quarter_exp;
    if (!cur) {
      sr.status = StepStatus::Skipped;
      cur = step.expect;
      rep.steps.push_back(sr);
      continue;
    }
    std::optional<Diagram> next;
    try {
      if (sr.scalar_fix) {
        std::vector<NodeId> remove;
        for (const auto& [p, t] : step.anchor.nodes) remove.push_back(t);
        ++rep.scalar_fixes;
        next = apply_scalar_fix(*cur, step.quarter_exp, remove);
      } else {
        const RewriteRule& rule = find_rule(step.rule);
        if (rule.conditional &&
            std::find(script.oracle_axioms.begin(), script.oracle_axioms.end(), rule.name) == script.oracle_axioms.end()) {
          sr.status = StepStatus::AxiomNotAdmitted;
          sr.message = "conditional rule not listed in oracle_axioms";
        } else {
          next = apply_rule(*cur, rule, step.params, step.anchor, step.direction).result;
        }
      }
    } catch (const SzxError& e) {
      sr.message = e.what();
      switch (e.code()) {
        case ErrorCode::UnknownRule: sr.status = StepStatus::UnknownRule; break;
        case ErrorCode::SideConditionFailed: sr.status = StepStatus::SideConditionFailed; break;
        default: sr.status = StepStatus::AnchorMismatch; break;
      }
    }

    if (next) {
      if (step.expect && !matches_up_to_rewiring(*next, *step.expect)) {
        sr.status = StepStatus::StructureMismatch;
        sr.message = "result differs from the expected diagram";
      }
      const Diagram& claimed = step.expect ? *step.expect : *next;
      // A scalar fix changes the scalar on purpose; compare against the
      // predecessor with the inverse correction applied.
      const Diagram reference = sr.scalar_fix ? tensor(*cur, scalar_diagram(sr.quarter_exp)) : *cur;
      bool same = false;
      try {
        same = equal_semantics(reference, claimed, tol);
      } catch (const SzxError& e) {
        sr.message = e.what();
      }
      if (!same) {
        sr.status = StepStatus::SemanticMismatch;
        try {
          sr.distance = semantic_distance(reference, claimed);
        } catch (const SzxError&) {
          sr.distance = -1;
        }
      }
      cur = claimed;
    } else {
      cur = step.expect;
    }
    rep.steps.push_back(sr);
  }
  if (cur) {
    rep.end_structural = matches_up_to_rewiring(*cur, script.end);
    try {
      rep.end_semantic = equal_semantics(*cur, script.end, tol);
    } catch (const SzxError&) {
      rep.end_semantic = false;
    }
  }
  return rep;
}

ScriptBuilder::ScriptBuilder(std::string name, Diagram start) : current_(start) {
  script_.name = std::move(name);
  script_.start = std::move(start);
}

std::map<NodeId, NodeId> ScriptBuilder::apply(const std::string& rule, const RuleParams& params, const Anchor& anchor,
                                              Direction dir, std::string note) {
  Application app = apply_rule(current_, rule, params, anchor, dir);
  ProofStep step;
  step.rule = rule;
  step.params = params;
  step.anchor = anchor;
  step.direction = dir;
  step.expect = app.result;
  step.note = std::move(note);
  script_.steps.push_back(std::move(step));
  current_ = std::move(app.result);
  return app.inserted;
}

void ScriptBuilder::scalar_fix(int quarter_exp, const std::vector<NodeId>& remove, std::string note) {
  ProofStep step;
  step.type = ProofStep::Type::ScalarFix;
  step.quarter_exp = quarter_exp;
  for (std::size_t i = 0; i < remove.size(); ++i) step.anchor.nodes[static_cast<NodeId>(i)] = remove[i];
  current_ = apply_scalar_fix(current_, quarter_exp, remove);
  step.expect = current_;
  step.note = std::move(note);
  script_.steps.push_back(std::move(step));
}

void ScriptBuilder::admit(const std::string& axiom) {
  if (std::find(script_.oracle_axioms.begin(), script_.oracle_axioms.end(), axiom) == script_.oracle_axioms.end())
    script_.oracle_axioms.push_back(axiom);
}

ProofScript ScriptBuilder::finish(std::optional<Diagram> end) const {
  ProofScript s = script_;
  s.end = end ? *end : current_;
  return s;
}

}  // namespace szx
