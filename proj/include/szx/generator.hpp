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

#include <string>
#include <string_view>
#include <vector>

#include "szx/classical.hpp"
#include "szx/core.hpp"

namespace szx {

enum class Kind {
  Green,
  Red,
  HBox,
  Divider,
  Gatherer,
  Identity,
  Swap,
  Cup,
  Cap,
  Discard,
  Mix,
  Star,
  FunctionArrow,
  RedArrow,
  YellowArrow,
};

std::string_view kind_tag(Kind k);
Kind kind_from_tag(std::string_view tag);

/// Wraps an angle into [0, 2pi).
double normalize_phase(double a);
bool phases_close(double a, double b, double tol = 1e-12);

/// Node label. Only the fields relevant to `kind` are meaningful.
///
/// Port layout by kind (inputs -> outputs):
///   Green/Red/HBox(k, n, m)   [k]^n -> [k]^m, legs unordered (flexsymmetric)
///   Divider(n)                [n+1] -> [1] (x) [n]
///   Gatherer(n)               [1] (x) [n] -> [n+1]
///   Identity(n)               [n] -> [n]
///   Swap(n, m)                [n] (x) [m] -> [m] (x) [n]
///   Cup(n) / Cap(n)           [0] -> [n] (x) [n]  /  [n] (x) [n] -> [0]
///   Discard(n) / Mix(n)       [n] -> [0]  /  [0] -> [n]
///   Star                      [0] -> [0]
///   arrows                    [n] -> [m], or [1]^n -> [1]^m when fanned
struct Generator {
  Kind kind = Kind::Star;
  int width = 1;
  int width2 = 1;
  int n_in = 0;
  int n_out = 0;
  std::vector<double> phases;
  std::vector<cd> labels;
  BooleanFunction function;
  F2Matrix red_matrix;
  BoolMatrix yellow_matrix;
  bool fanned = false;

  static Generator green(int k, int n, int m, std::vector<double> phases = {});
  static Generator red(int k, int n, int m, std::vector<double> phases = {});
  static Generator hbox(int k, int n, int m, std::vector<cd> labels = {});
  static Generator divider(int n);
  static Generator gatherer(int n);
  static Generator identity(int n);
  static Generator swap(int n, int m);
  static Generator cup(int n);
  static Generator cap(int n);
  static Generator discard(int n);
  static Generator mix(int n);
  static Generator star();
  static Generator function_arrow(BooleanFunction f);
  static Generator red_arrow(F2Matrix a);
  static Generator yellow_arrow(BoolMatrix a);

  std::vector<int> in_widths() const;
  std::vector<int> out_widths() const;
  int arity() const;
  int port_width(bool out, int index) const;

  bool is_arachnid() const;
  bool is_spider() const;
  /// Identity, Swap, Cup, Cap, Divider, Gatherer: pure rewiring.
  bool is_wiring() const;
  bool is_arrow() const;
  bool is_pure() const { return kind != Kind::Discard && kind != Kind::Mix; }

  /// Bits in and out of an arrow.
  int arrow_in_bits() const;
  int arrow_out_bits() const;
  BooleanFunction arrow_function() const;

  /// Same label; arachnids compare by total leg count rather than by the
  /// in/out split.
  bool matches(const Generator& other, double tol = 1e-12) const;
  /// Exact structural equality (phases up to tol).
  bool same(const Generator& other, double tol = 1e-12) const;

  /// Throws ValidationFailed when the label is malformed.
  void check() const;

  std::string describe() const;
};

}  // namespace szx
