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

// Parametric rewrite rules, anchored application and soundness sampling.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "szx/classical.hpp"
#include "szx/diagram.hpp"
#include "szx/semantics.hpp"

namespace szx {

/// Parameters of a rule instance. Each rule reads the fields it needs; the
/// per-rule schema string in the registry names them.
struct RuleParams {
  Kind kind = Kind::Green;  // arachnid colour for colour-generic rules
  int width = 1;
  int width2 = 1;
  int n = 1;
  int m = 1;
  int p = 1;
  int q = 1;
  int variant = 0;
  Word x = 0;
  std::vector<double> phase;
  std::vector<double> phase2;
  std::vector<cd> label;
  BooleanFunction f;
  BooleanFunction g;
  F2Matrix a;
  F2Matrix b;
  F2Matrix c;
  F2Matrix d;
  BoolMatrix y;
  std::vector<int> perm;
  TypeList types_a;
  TypeList types_b;
  TypeList types_c;
  std::optional<Diagram> diagram;

  bool operator==(const RuleParams&) const = default;
};

enum class Direction { LeftToRight, RightToLeft };

std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);

struct RewriteRule {
  std::string name;
  std::string summary;
  std::string schema;  // parameter fields used
  std::function<Diagram(const RuleParams&)> lhs;
  std::function<Diagram(const RuleParams&)> rhs;
  std::function<bool(const RuleParams&)> side_condition;  // empty: always true
  std::function<RuleParams(std::mt19937_64&)> sample;
  /// Conditional axioms (promises about a specific oracle function) must be
  /// admitted explicitly by a proof script.
  bool conditional = false;

  bool condition_holds(const RuleParams& p) const { return !side_condition || side_condition(p); }
};

const std::vector<RewriteRule>& rule_registry();
/// Throws UnknownRule.
const RewriteRule& find_rule(std::string_view name);

struct RuleInfo {
  std::string name;
  std::string summary;
  std::string schema;
  bool conditional;
};
std::vector<RuleInfo> list_rules();

/// Where a rule side sits in the target: pattern node id -> target node id,
/// plus optionally the external endpoint of each pattern boundary slot
/// (inputs then outputs). Slots wired straight through the pattern need
/// their boundary entries.
struct Anchor {
  std::map<NodeId, NodeId> nodes;
  std::vector<std::optional<Endpoint>> boundary;
};

/// The subdiagram of `d` on `nodes` (ids kept) and the anchor locating it in
/// `d`. Every cut edge becomes a boundary slot: an input slot when the far
/// end is a node output or an input of d, an output slot otherwise.
struct Extraction {
  Diagram pattern;
  Anchor anchor;
};
Extraction extract_subdiagram(const Diagram& d, const std::set<NodeId>& nodes);

struct Application {
  Diagram result;
  /// Node id of the inserted side -> id in the result.
  std::map<NodeId, NodeId> inserted;
};

/// Replaces the anchored occurrence of one side with the other side. Throws
/// AnchorMismatch or SideConditionFailed.
Application apply_rule(const Diagram& d, const RewriteRule& rule, const RuleParams& params, const Anchor& anchor,
                       Direction dir = Direction::LeftToRight);
Application apply_rule(const Diagram& d, std::string_view rule, const RuleParams& params, const Anchor& anchor,
                       Direction dir = Direction::LeftToRight);

/// Anchor for applying a rule to a diagram that is exactly one side of it.
Anchor whole_anchor(const Diagram& side);

struct SoundnessReport {
  std::string rule;
  int trials = 0;          // instances checked (side condition true)
  int rejected = 0;        // sampled instances whose side condition failed
  double max_distance = 0; // worst superoperator difference over all trials
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && trials > 0; }
};

/// Samples instances until `trials` satisfy the side condition (giving up
/// after 20x as many draws) and compares both sides semantically.
SoundnessReport check_rule_soundness(const RewriteRule& rule, int trials, std::uint64_t seed,
                                     const Tolerance& tol = {});

// Proof scripts.

struct ProofStep {
  enum class Type { Rule, ScalarFix };
  Type type = Type::Rule;
  std::string rule;
  RuleParams params;
  Anchor anchor;
  Direction direction = Direction::LeftToRight;
  /// ScalarFix: with no anchor nodes, tensors scalar_diagram(quarter_exp) in;
  /// otherwise removes the scalar nodes named by anchor.nodes (values), whose
  /// amplitudes must multiply to 2^(quarter_exp/4).
  int quarter_exp = 0;
  /// Optional diagram the step is claimed to produce.
  std::optional<Diagram> expect;
  std::string note;
};

struct ProofScript {
  std::string name;
  std::string description;
  Diagram start;
  std::vector<ProofStep> steps;
  Diagram end;
  std::vector<std::string> oracle_axioms;
};

enum class StepStatus {
  Passed,
  UnknownRule,
  AxiomNotAdmitted,
  AnchorMismatch,
  SideConditionFailed,
  StructureMismatch,  // result differs from the step's expected diagram
  SemanticMismatch,
  Skipped,            // an earlier step left no diagram to continue from
};

std::string_view to_string(StepStatus s);

struct StepReport {
  int index = 0;
  std::string rule;
  StepStatus status = StepStatus::Passed;
  bool scalar_fix = false;
  int quarter_exp = 0;  // net change of the scalar, in quarter exponents
  double distance = 0;
  std::string message;
};

struct ProofReport {
  std::string name;
  std::vector<StepReport> steps;
  bool end_structural = false;  // final diagram matches `end` up to rewiring
  bool end_semantic = false;
  int scalar_fixes = 0;

  bool passed() const;
};

/// Throws ValidationFailed when the script is malformed: ill-formed start,
/// end or expected diagrams, or oracle_axioms naming unknown rules.
ProofReport check_proof(const ProofScript& script, const Tolerance& tol = {});

/// Builds scripts step by step, recording each result as the step's expected
/// diagram.
class ScriptBuilder {
 public:
  ScriptBuilder(std::string name, Diagram start);

  const Diagram& current() const { return current_; }
  /// Applies a rule; returns the ids of the inserted nodes.
  std::map<NodeId, NodeId> apply(const std::string& rule, const RuleParams& params, const Anchor& anchor,
                                 Direction dir = Direction::LeftToRight, std::string note = {});
  void scalar_fix(int quarter_exp, const std::vector<NodeId>& remove = {}, std::string note = {});
  void admit(const std::string& axiom);
  void describe(std::string text) { script_.description = std::move(text); }
  ProofScript finish(std::optional<Diagram> end = std::nullopt) const;

 private:
  ProofScript script_;
  Diagram current_;
};

/// Result of a scalar-fix step applied to d. Throws AnchorMismatch when a
/// removal names nodes that are not scalar generators of the right total.
Diagram apply_scalar_fix(const Diagram& d, int quarter_exp, const std::vector<NodeId>& remove);

}  // namespace szx
