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

// Functors of the scalable notation: rewiring, boxing, thickening, wire
// stripping, and the iteration construction.
//
// Thickening uses copy-major bit order: the k*n bits of T_k([n]) are k
// consecutive blocks of n bits, block c being the c-th copy.

#include "szx/diagram.hpp"

namespace szx {

Diagram divider(int n);
Diagram gatherer(int n);

/// Canonical divider/gatherer isomorphism a -> b: full division to width-1
/// wires followed by full gathering. Throws SizeMismatch if |a| != |b|.
Diagram rewire(const TypeList& a, const TypeList& b);

/// Full division of `in`, the width-1 wire permutation `perm` (wire i goes to
/// position perm[i]), then full gathering into `out`.
Diagram regroup(const TypeList& in, const TypeList& out, const std::vector<int>& perm);

/// rewire(outputs) . d . rewire(inputs), with single-wire boundaries
/// [|inputs|] -> [|outputs|] (a unit boundary stays unit).
Diagram box(const Diagram& d);

/// T_k: multiplies every width by k.
Diagram thicken(const Diagram& d, int k);

/// Wire stripping: every wire becomes width 1 and all wiring generators are
/// replaced by plain edges. Deterministic, hence idempotent.
Diagram strip(const Diagram& d);

/// True when every node only rewires (dividers, gatherers, identities,
/// swaps, cups, caps).
bool is_wiring_only(const Diagram& d);

/// Normal form of a wiring-only diagram: plain edges when every boundary
/// wire is joined in bit order to one other wire of the same width, and
/// otherwise full division, the stripped connections and full gathering.
/// Two wiring-only diagrams with the same stripped connectivity have the same
/// normal form.
Diagram wiring_normal_form(const Diagram& w);

/// Trace construction: box f, thicken by k+1, shift blocks cyclically and
/// close blocks 2..k+1 with cups and caps. Equal to unroll(f, k).
Diagram iterate(const Diagram& f, int k);

/// f composed k+1 times.
Diagram unroll(const Diagram& f, int k);

/// Cyclic shift of `blocks` blocks of `block_width` width-1 wires on a
/// single wire [blocks * block_width]: block c moves to block c+1 mod blocks.
Diagram block_shift(int block_width, int blocks);

/// Scalar diagram with pure amplitude 2^(e/4), made of stars (2^(-1/4)) and
/// empty green spiders (2^(1/2)).
Diagram scalar_diagram(int quarter_exp);

}  // namespace szx
