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

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace szx {

using cd = std::complex<double>;

enum class ErrorCode {
  TypeMismatch,
  SizeMismatch,
  NotPure,
  UnknownName,
  AnchorMismatch,
  SideConditionFailed,
  UnknownRule,
  ValidationFailed,
  PromiseViolated,
  Degenerate,
  NotBoolean,
  ShapeMismatch,
  Inconsistent,
  InvalidArgument,
  ParseError,
};

std::string to_string(ErrorCode code);

/// The single exception type of the library; `code()` carries the category.
class SzxError : public std::runtime_error {
 public:
  SzxError(ErrorCode code, const std::string& what)
      : std::runtime_error(to_string(code) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Boundary type of a diagram: ordered wire widths, each a color [n] with
/// n >= 1. The empty list is the tensor unit [0].
class TypeList {
 public:
  TypeList() = default;
  TypeList(std::initializer_list<int> widths);
  explicit TypeList(std::vector<int> widths);

  /// [w]^count
  static TypeList repeat(int width, int count);

  const std::vector<int>& widths() const { return widths_; }
  std::size_t length() const { return widths_.size(); }
  bool empty() const { return widths_.empty(); }
  int operator[](std::size_t i) const { return widths_[i]; }
  int size() const;

  TypeList concat(const TypeList& other) const;

  auto operator<=>(const TypeList&) const = default;

 private:
  std::vector<int> widths_;
};

std::string to_string(const TypeList& t);

using NodeId = int;

/// A port of a node or a boundary slot of a diagram. Boundary slots have
/// node == kBoundary; `out` then selects the output boundary.
struct Endpoint {
  static constexpr NodeId kBoundary = -1;

  NodeId node = kBoundary;
  bool out = false;
  int index = 0;

  static Endpoint input(int i) { return {kBoundary, false, i}; }
  static Endpoint output(int i) { return {kBoundary, true, i}; }
  static Endpoint in_port(NodeId n, int i) { return {n, false, i}; }
  static Endpoint out_port(NodeId n, int i) { return {n, true, i}; }

  bool is_boundary() const { return node == kBoundary; }

  auto operator<=>(const Endpoint&) const = default;
};

std::string to_string(const Endpoint& e);

/// Integer exponent of 2^(e/4).
double quarter_pow2(int e);

}  // namespace szx
