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

#include "szx/core.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace szx {

std::string to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::AnchorMismatch: return "AnchorMismatch";
    case ErrorCode::SideConditionFailed: return "SideConditionFailed";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::PromiseViolated: return "PromiseViolated";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotBoolean: return "NotBoolean";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

TypeList::TypeList(std::initializer_list<int> widths) : TypeList(std::vector<int>(widths)) {}

TypeList::TypeList(std::vector<int> widths) : widths_(std::move(widths)) {
  for (int w : widths_) {
    if (w < 1) throw SzxError(ErrorCode::InvalidArgument, "wire widths must be positive");
  }
}

TypeList TypeList::repeat(int width, int count) {
  return TypeList(std::vector<int>(static_cast<std::size_t>(count), width));
}

int TypeList::size() const { return std::accumulate(widths_.begin(), widths_.end(), 0); }

TypeList TypeList::concat(const TypeList& other) const {
  std::vector<int> w = widths_;
  w.insert(w.end(), other.widths_.begin(), other.widths_.end());
  return TypeList(std::move(w));
}

std::string to_string(const TypeList& t) {
  if (t.empty()) return "[0]";
  std::ostringstream out;
  for (std::size_t i = 0; i < t.length(); ++i) {
    if (i) out << "(x)";
    out << "[" << t[i] << "]";
  }
  return out.str();
}

std::string to_string(const Endpoint& e) {
  std::ostringstream out;
  if (e.is_boundary()) {
    out << (e.out ? "out:" : "in:") << e.index;
  } else {
    out << e.node << ":" << (e.out ? "o" : "i") << e.index;
  }
  return out.str();
}

double quarter_pow2(int e) { return std::exp2(static_cast<double>(e) / 4.0); }

}  // namespace szx
