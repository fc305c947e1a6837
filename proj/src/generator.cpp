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

#include "szx/generator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace szx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct TagEntry {
  Kind kind;
  std::string_view tag;
};

constexpr TagEntry kTags[] = {
    {Kind::Green, "green"},       {Kind::Red, "red"},
    {Kind::HBox, "hbox"},         {Kind::Divider, "divider"},
    {Kind::Gatherer, "gatherer"}, {Kind::Identity, "identity"},
    {Kind::Swap, "swap"},         {Kind::Cup, "cup"},
    {Kind::Cap, "cap"},           {Kind::Discard, "discard"},
    {Kind::Mix, "mix"},           {Kind::Star, "star"},
    {Kind::FunctionArrow, "function"}, {Kind::RedArrow, "red_arrow"},
    {Kind::YellowArrow, "yellow_arrow"},
};

void require(bool ok, const std::string& what) {
  if (!ok) throw SzxError(ErrorCode::ValidationFailed, what);
}

}  // namespace

std::string_view kind_tag(Kind k) {
  for (const auto& e : kTags)
    if (e.kind == k) return e.tag;
  return "unknown";
}

Kind kind_from_tag(std::string_view tag) {
  for (const auto& e : kTags)
    if (e.tag == tag) return e.kind;
  throw SzxError(ErrorCode::UnknownName, "generator kind '" + std::string(tag) + "'");
}

double normalize_phase(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

bool phases_close(double a, double b, double tol) {
  const double d = normalize_phase(a - b);
  return d <= tol || kTwoPi - d <= tol;
}

Generator Generator::green(int k, int n, int m, std::vector<double> phases) {
  Generator g;
  g.kind = Kind::Green;
  g.width = k;
  g.n_in = n;
  g.n_out = m;
  if (phases.empty()) phases.assign(static_cast<std::size_t>(k), 0.0);
  for (auto& p : phases) p = normalize_phase(p);
  g.phases = std::move(phases);
  g.check();
  return g;
}

Generator Generator::red(int k, int n, int m, std::vector<double> phases) {
  Generator g = green(k, n, m, std::move(phases));
  g.kind = Kind::Red;
  return g;
}

Generator Generator::hbox(int k, int n, int m, std::vector<cd> labels) {
  Generator g;
  g.kind = Kind::HBox;
  g.width = k;
  g.n_in = n;
  g.n_out = m;
  if (labels.empty()) labels.assign(static_cast<std::size_t>(k), cd(-1.0, 0.0));
  g.labels = std::move(labels);
  g.check();
  return g;
}

namespace {

Generator simple(Kind kind, int n) {
  Generator g;
  g.kind = kind;
  g.width = n;
  g.check();
  return g;
}

}  // namespace

Generator Generator::divider(int n) { return simple(Kind::Divider, n); }
Generator Generator::gatherer(int n) { return simple(Kind::Gatherer, n); }
Generator Generator::identity(int n) { return simple(Kind::Identity, n); }
Generator Generator::cup(int n) { return simple(Kind::Cup, n); }
Generator Generator::cap(int n) { return simple(Kind::Cap, n); }
Generator Generator::discard(int n) { return simple(Kind::Discard, n); }
Generator Generator::mix(int n) { return simple(Kind::Mix, n); }

Generator Generator::swap(int n, int m) {
  Generator g;
  g.kind = Kind::Swap;
  g.width = n;
  g.width2 = m;
  g.check();
  return g;
}

Generator Generator::star() {
  Generator g;
  g.kind = Kind::Star;
  g.width = 0;
  return g;
}

Generator Generator::function_arrow(BooleanFunction f) {
  Generator g;
  g.kind = Kind::FunctionArrow;
  g.function = std::move(f);
  g.check();
  return g;
}

Generator Generator::red_arrow(F2Matrix a) {
  Generator g;
  g.kind = Kind::RedArrow;
  g.red_matrix = std::move(a);
  g.check();
  return g;
}

Generator Generator::yellow_arrow(BoolMatrix a) {
  Generator g;
  g.kind = Kind::YellowArrow;
  g.yellow_matrix = std::move(a);
  g.check();
  return g;
}

int Generator::arrow_in_bits() const {
  switch (kind) {
    case Kind::FunctionArrow: return function.n();
    case Kind::RedArrow: return red_matrix.cols();
    case Kind::YellowArrow: return yellow_matrix.cols();
    default: return 0;
  }
}

int Generator::arrow_out_bits() const {
  switch (kind) {
    case Kind::FunctionArrow: return function.m();
    case Kind::RedArrow: return red_matrix.rows();
    case Kind::YellowArrow: return yellow_matrix.rows();
    default: return 0;
  }
}

BooleanFunction Generator::arrow_function() const {
  switch (kind) {
    case Kind::FunctionArrow: return function;
    case Kind::RedArrow: return red_matrix.to_function();
    case Kind::YellowArrow: return yellow_matrix.to_function();
    default: throw SzxError(ErrorCode::InvalidArgument, "not an arrow");
  }
}

std::vector<int> Generator::in_widths() const {
  switch (kind) {
    case Kind::Green:
    case Kind::Red:
    case Kind::HBox: return std::vector<int>(static_cast<std::size_t>(n_in), width);
    case Kind::Divider: return {width + 1};
    case Kind::Gatherer: return {1, width};
    case Kind::Identity: return {width};
    case Kind::Swap: return {width, width2};
    case Kind::Cup: return {};
    case Kind::Cap: return {width, width};
    case Kind::Discard: return {width};
    case Kind::Mix: return {};
    case Kind::Star: return {};
    case Kind::FunctionArrow:
    case Kind::RedArrow:
    case Kind::YellowArrow:
      if (fanned) return std::vector<int>(static_cast<std::size_t>(arrow_in_bits()), 1);
      return {arrow_in_bits()};
  }
  return {};
}

std::vector<int> Generator::out_widths() const {
  switch (kind) {
    case Kind::Green:
    case Kind::Red:
    case Kind::HBox: return std::vector<int>(static_cast<std::size_t>(n_out), width);
    case Kind::Divider: return {1, width};
    case Kind::Gatherer: return {width + 1};
    case Kind::Identity: return {width};
    case Kind::Swap: return {width2, width};
    case Kind::Cup: return {width, width};
    case Kind::Cap: return {};
    case Kind::Discard: return {};
    case Kind::Mix: return {width};
    case Kind::Star: return {};
    case Kind::FunctionArrow:
    case Kind::RedArrow:
    case Kind::YellowArrow:
      if (fanned) return std::vector<int>(static_cast<std::size_t>(arrow_out_bits()), 1);
      return {arrow_out_bits()};
  }
  return {};
}

int Generator::arity() const {
  return static_cast<int>(in_widths().size() + out_widths().size());
}

int Generator::port_width(bool out, int index) const {
  const auto w = out ? out_widths() : in_widths();
  if (index < 0 || index >= static_cast<int>(w.size()))
    throw SzxError(ErrorCode::InvalidArgument, "port index out of range on " + describe());
  return w[static_cast<std::size_t>(index)];
}

bool Generator::is_arachnid() const {
  return kind == Kind::Green || kind == Kind::Red || kind == Kind::HBox;
}

bool Generator::is_spider() const { return kind == Kind::Green || kind == Kind::Red; }

bool Generator::is_wiring() const {
  switch (kind) {
    case Kind::Identity:
    case Kind::Swap:
    case Kind::Cup:
    case Kind::Cap:
    case Kind::Divider:
    case Kind::Gatherer: return true;
    default: return false;
  }
}

bool Generator::is_arrow() const {
  return kind == Kind::FunctionArrow || kind == Kind::RedArrow || kind == Kind::YellowArrow;
}

namespace {

bool same_label(const Generator& a, const Generator& b, double tol) {
  if (a.kind != b.kind || a.width != b.width) return false;
  switch (a.kind) {
    case Kind::Green:
    case Kind::Red:
      for (std::size_t j = 0; j < a.phases.size(); ++j)
        if (!phases_close(a.phases[j], b.phases[j], tol)) return false;
      return true;
    case Kind::HBox:
      for (std::size_t j = 0; j < a.labels.size(); ++j)
        if (std::abs(a.labels[j] - b.labels[j]) > tol) return false;
      return true;
    case Kind::Swap: return a.width2 == b.width2;
    case Kind::FunctionArrow: return a.function == b.function && a.fanned == b.fanned;
    case Kind::RedArrow: return a.red_matrix == b.red_matrix && a.fanned == b.fanned;
    case Kind::YellowArrow: return a.yellow_matrix == b.yellow_matrix && a.fanned == b.fanned;
    default: return true;
  }
}

}  // namespace

bool Generator::matches(const Generator& other, double tol) const {
  if (!same_label(*this, other, tol)) return false;
  if (is_arachnid()) return n_in + n_out == other.n_in + other.n_out;
  return true;
}

bool Generator::same(const Generator& other, double tol) const {
  if (!same_label(*this, other, tol)) return false;
  if (is_arachnid()) return n_in == other.n_in && n_out == other.n_out;
  return true;
}

void Generator::check() const {
  switch (kind) {
    case Kind::Green:
    case Kind::Red:
      require(width >= 1, "spider width must be >= 1");
      require(n_in >= 0 && n_out >= 0, "negative degree");
      require(static_cast<int>(phases.size()) == width, "phase vector length must equal width");
      break;
    case Kind::HBox:
      require(width >= 1, "H-box width must be >= 1");
      require(n_in >= 0 && n_out >= 0, "negative degree");
      require(static_cast<int>(labels.size()) == width, "label vector length must equal width");
      break;
    case Kind::Swap:
      require(width >= 1 && width2 >= 1, "swap widths must be >= 1");
      break;
    case Kind::Star: break;
    case Kind::FunctionArrow:
      require(function.n() >= 1 && function.m() >= 1, "function arrow needs n, m >= 1");
      break;
    case Kind::RedArrow:
      require(red_matrix.rows() >= 1 && red_matrix.cols() >= 1, "red arrow needs a nonempty matrix");
      break;
    case Kind::YellowArrow:
      require(yellow_matrix.rows() >= 1 && yellow_matrix.cols() >= 1,
              "yellow arrow needs a nonempty matrix");
      break;
    default: require(width >= 1, "width must be >= 1"); break;
  }
}

std::string Generator::describe() const {
  std::ostringstream out;
  out << kind_tag(kind);
  if (is_arachnid()) {
    out << "[" << width << "] " << n_in << "->" << n_out;
  } else if (kind == Kind::Swap) {
    out << "(" << width << "," << width2 << ")";
  } else if (is_arrow()) {
    out << " " << arrow_in_bits() << "->" << arrow_out_bits();
  } else if (kind != Kind::Star) {
    out << "(" << width << ")";
  }
  return out.str();
}

}  // namespace szx
