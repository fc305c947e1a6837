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

// Dense qubit tensor networks: every leg has dimension 2.

#include <vector>

#include "szx/core.hpp"

namespace szx::tn {

/// Entries indexed by the leg bits, legs[0] most significant.
struct Tensor {
  std::vector<int> legs;
  std::vector<cd> data;

  static Tensor scalar(cd value);
  std::size_t rank() const { return legs.size(); }
};

/// Sums over a leg label appearing twice in the same tensor.
Tensor trace_repeated(Tensor t);

/// Contracts the shared labels of a and b. Result legs: a's free legs then
/// b's free legs, both in their original order.
Tensor contract(const Tensor& a, const Tensor& b);

/// Reorders legs to `order` (a permutation of t.legs).
Tensor permute(const Tensor& t, const std::vector<int>& order);

/// Contracts the whole network greedily (smallest intermediate first) and
/// returns a tensor whose legs are `open` in that order. Every label that is
/// not open must appear on exactly two legs.
Tensor contract_network(std::vector<Tensor> tensors, const std::vector<int>& open);

}  // namespace szx::tn
