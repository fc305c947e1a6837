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

// Graph exports. Both are deterministic: nodes in id order, edges in
// Diagram::edges() order. Boundary slots are drawn as their own vertices.

#include <string>

#include "szx/diagram.hpp"

namespace szx {

/// Short human label: kind, widths and legs, then nonzero phases (in units
/// of pi) or H-box labels.
std::string node_label(const Generator& g);

/// Graphviz graph, read left to right.
std::string to_dot(const Diagram& d, const std::string& name = "szx");

/// Standalone tikzpicture. Columns follow the longest path from the inputs.
std::string to_tikz(const Diagram& d);

}  // namespace szx
