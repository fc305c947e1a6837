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

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "szx/core.hpp"
#include "szx/generator.hpp"

namespace szx {

/// An open port graph. Edges are undirected and join two endpoints (node
/// ports or boundary slots) of equal width; a well-formed diagram has exactly
/// one edge at every endpoint. Interpretation does not depend on edge
/// orientation, so an edge may join e.g. two output slots (a cup) or a node
/// input directly to an output slot.
class Diagram {
 public:
  Diagram() = default;
  Diagram(TypeList inputs, TypeList outputs);

  const TypeList& inputs() const { return inputs_; }
  const TypeList& outputs() const { return outputs_; }
  const std::map<NodeId, Generator>& nodes() const { return nodes_; }
  const Generator& node(NodeId id) const;
  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  std::size_t node_count() const { return nodes_.size(); }
  NodeId next_id() const { return nodes_.empty() ? 0 : nodes_.rbegin()->first + 1; }

  NodeId add_node(Generator g);
  /// Adds with a caller-chosen id; throws InvalidArgument if taken.
  void add_node(NodeId id, Generator g);
  void remove_node(NodeId id);

  /// Joins two free endpoints; throws TypeMismatch on width mismatch and
  /// InvalidArgument if an endpoint is already linked.
  void connect(Endpoint a, Endpoint b);
  void disconnect(Endpoint a);
  std::optional<Endpoint> partner(Endpoint e) const;
  bool is_linked(Endpoint e) const { return links_.count(e) != 0; }

  /// Width of an endpoint; throws InvalidArgument if it does not exist.
  int width(Endpoint e) const;
  bool exists(Endpoint e) const;

  /// Every endpoint of the diagram: input slots, output slots, then node
  /// ports (inputs before outputs) in node id order.
  std::vector<Endpoint> endpoints() const;
  /// Each edge once, as (smaller, larger).
  std::vector<std::pair<Endpoint, Endpoint>> edges() const;

  bool is_pure() const;

  /// Same node ids, labels, boundaries and edges.
  bool operator==(const Diagram& other) const;

  /// Replaces the boundary types; used by transpose-like re-labellings.
  void set_boundary(TypeList inputs, TypeList outputs);

 private:
  TypeList inputs_;
  TypeList outputs_;
  std::map<NodeId, Generator> nodes_;
  std::map<Endpoint, Endpoint> links_;
};

enum class Violation {
  DanglingPort,
  WidthMismatch,
  UnknownEndpoint,
  BadGenerator,
};

struct ViolationReport {
  Violation kind;
  Endpoint where;
  std::string message;
};

std::string_view to_string(Violation v);

/// Empty iff every diagram invariant holds.
std::vector<ViolationReport> validate(const Diagram& d);

// Categorical structure.

/// g after f; throws TypeMismatch unless outputs(f) == inputs(g).
Diagram compose(const Diagram& f, const Diagram& g);
Diagram tensor(const Diagram& f, const Diagram& g);
/// Left-to-right sequence of compositions.
Diagram compose_all(const std::vector<Diagram>& parts);
Diagram tensor_all(const std::vector<Diagram>& parts);

Diagram empty_diagram();
Diagram identity(const TypeList& t);
/// a (x) b -> b (x) a, built from Swap generators.
Diagram swap(const TypeList& a, const TypeList& b);
Diagram cup(int n);
Diagram cap(int n);

/// Single-node diagram whose boundary is exactly the generator's ports.
Diagram from_generator(const Generator& g);

/// Wire permutation of t: input wire i is routed to output position perm[i],
/// materialized as adjacent Swap generators.
Diagram permutation(const TypeList& t, const std::vector<int>& perm);

/// Exchanges the boundaries (bending every leg); interpretation is the
/// transpose.
Diagram transpose(const Diagram& d);
/// Transpose with conjugated phases and labels.
Diagram adjoint(const Diagram& d);

/// Structural equality up to node renaming, with arachnid legs treated as
/// unordered. Boundary slots must correspond exactly.
bool isomorphic(const Diagram& a, const Diagram& b);

}  // namespace szx
