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
#include <vector>

#include "szx/diagram.hpp"

namespace szx {

/// Boundary slots of a diagram enumerated inputs first, then outputs.
std::vector<Endpoint> boundary_slots(const Diagram& d);

/// Outcome of embedding a pattern diagram into a target.
struct Embedding {
  std::map<NodeId, NodeId> nodes;
  std::map<Endpoint, Endpoint> ports;  // pattern port -> target port
  /// For every pattern slot (boundary_slots order), the target endpoint
  /// outside the embedded region that the slot corresponds to.
  std::vector<Endpoint> externals;
};

/// Finds port assignments for a fixed node mapping. Arachnid legs may be
/// assigned in any order; other ports must correspond exactly. `hints`, when
/// nonempty, pins the external endpoint of each slot; slots joined directly
/// to another slot inside the pattern require a hint.
std::optional<Embedding> embed(const Diagram& pattern, const Diagram& target,
                               const std::map<NodeId, NodeId>& nodes,
                               const std::vector<std::optional<Endpoint>>& hints = {});

}  // namespace szx
