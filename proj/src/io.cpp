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

#include "szx/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <numeric>
#include <sstream>

#include "szx/oracles.hpp"

namespace szx {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(const std::string& what) { throw SzxError(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get<T>(j, key);
}

void expect_format(const Json& j, std::string_view format) {
  const std::string got = get<std::string>(j, "format");
  if (got != format) fail("expected format '" + std::string(format) + "', got '" + got + "'");
}

Json type_to_json(const TypeList& t) { return Json(t.widths()); }

TypeList type_from_json(const Json& j) {
  if (!j.is_array()) fail("type list must be an array of widths");
  std::vector<int> w;
  for (const Json& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 1) fail("wire widths must be positive integers");
    w.push_back(x.get<int>());
  }
  return TypeList(w);
}

Json word_to_json(Word w, int n) { return word_to_string(w, n); }

Word word_from_json(const Json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return j.get<Word>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (char c : s)
      if (c != '0' && c != '1') fail("bit string expected, got '" + s + "'");
    return word_from_string(s);
  }
  fail("expected a bit string or integer");
}

Json label_to_json(cd z) {
  if (z.imag() == 0) return z.real();
  return Json::array({z.real(), z.imag()});
}

cd label_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  fail("H-box label must be a number or [re, im]");
}

}  // namespace

Json phase_to_json(double a) {
  const double t = a / kPi;
  for (long q = 1; q <= 1024; q *= 2) {
    for (long qq : {q, 3 * q, 5 * q}) {
      const double pn = std::round(t * static_cast<double>(qq));
      const long p = static_cast<long>(pn);
      if (static_cast<double>(p) * kPi / static_cast<double>(qq) == a) {
        const long g = std::gcd(std::abs(p), qq);
        const long num = p / (g ? g : 1);
        const long den = qq / (g ? g : 1);
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
      }
    }
  }
  return a;
}

double phase_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) fail("phase must be a number (radians) or a string 'p/q' (units of pi)");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    const long p = std::stol(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) fail("bad phase '" + s + "'");
    long q = 1;
    if (slash != std::string::npos) {
      const std::string den = s.substr(slash + 1);
      q = std::stol(den, &used);
      if (used != den.size() || q <= 0) fail("bad phase '" + s + "'");
    }
    return static_cast<double>(p) * kPi / static_cast<double>(q);
  } catch (const std::logic_error&) {
    fail("bad phase '" + s + "'");
  }
}

std::string endpoint_to_string(const Endpoint& e) { return to_string(e); }

Endpoint endpoint_from_string(std::string_view s) {
  const std::string str(s);
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::logic_error&) {
      fail("bad endpoint '" + str + "'");
    }
    if (used != t.size() || v < 0) fail("bad endpoint '" + str + "'");
    return v;
  };
  if (str.rfind("in:", 0) == 0) return Endpoint::input(number(str.substr(3)));
  if (str.rfind("out:", 0) == 0) return Endpoint::output(number(str.substr(4)));
  const auto colon = str.find(':');
  if (colon == std::string::npos || colon + 2 > str.size()) fail("bad endpoint '" + str + "'");
  const char side = str[colon + 1];
  if (side != 'i' && side != 'o') fail("bad endpoint '" + str + "'");
  return Endpoint{number(str.substr(0, colon)), side == 'o', number(str.substr(colon + 2))};
}

Json function_to_json(const BooleanFunction& f) {
  Json j;
  j["n"] = f.n();
  j["m"] = f.m();
  j["table"] = f.table();
  return j;
}

BooleanFunction function_from_json(const Json& j) {
  const int n = get<int>(j, "n");
  const int m = get<int>(j, "m");
  if (n < 0 || m < 0 || n > 20 || m > 63) fail("function arity out of range");
  const std::vector<Word> table = get<std::vector<Word>>(j, "table");
  if (table.size() != (std::size_t{1} << n)) fail("truth table needs 2^n entries");
  for (Word v : table)
    if (m < 64 && (v >> m) != 0) fail("truth table value exceeds m bits");
  return BooleanFunction(n, m, table);
}

Json f2_to_json(const F2Matrix& a) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["data"] = a.to_strings();
  return j;
}

namespace {

template <typename M>
M matrix_from_json(const Json& j) {
  const int rows = get<int>(j, "rows");
  const int cols = get<int>(j, "cols");
  if (rows < 0 || cols < 0 || cols > 63) fail("matrix shape out of range");
  const std::vector<std::string> data = get<std::vector<std::string>>(j, "data");
  if (static_cast<int>(data.size()) != rows) fail("matrix needs one row string per row");
  std::vector<Word> words;
  for (const std::string& r : data) {
    if (static_cast<int>(r.size()) != cols) fail("matrix row '" + r + "' has the wrong length");
    words.push_back(word_from_json(Json(r)));
  }
  return M(rows, cols, words);
}

}  // namespace

F2Matrix f2_from_json(const Json& j) { return matrix_from_json<F2Matrix>(j); }

Json bool_matrix_to_json(const BoolMatrix& a) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["data"] = a.to_strings();
  return j;
}

BoolMatrix bool_matrix_from_json(const Json& j) { return matrix_from_json<BoolMatrix>(j); }

Json generator_to_json(const Generator& g) {
  Json j;
  j["kind"] = std::string(kind_tag(g.kind));
  switch (g.kind) {
    case Kind::Green:
    case Kind::Red:
    case Kind::HBox:
      j["width"] = g.width;
      j["in"] = g.n_in;
      j["out"] = g.n_out;
      if (g.kind == Kind::HBox) {
        Json labels = Json::array();
        for (cd z : g.labels) labels.push_back(label_to_json(z));
        j["labels"] = labels;
      } else {
        Json phases = Json::array();
        for (double a : g.phases) phases.push_back(phase_to_json(a));
        j["phases"] = phases;
      }
      break;
    case Kind::Swap:
      j["width"] = g.width;
      j["width2"] = g.width2;
      break;
    case Kind::Star: break;
    case Kind::FunctionArrow:
      j["function"] = function_to_json(g.function);
      j["fanned"] = g.fanned;
      break;
    case Kind::RedArrow:
      j["matrix"] = f2_to_json(g.red_matrix);
      j["fanned"] = g.fanned;
      break;
    case Kind::YellowArrow:
      j["matrix"] = bool_matrix_to_json(g.yellow_matrix);
      j["fanned"] = g.fanned;
      break;
    default: j["width"] = g.width; break;
  }
  return j;
}

Generator generator_from_json(const Json& j) {
  Kind kind;
  try {
    kind = kind_from_tag(get<std::string>(j, "kind"));
  } catch (const SzxError& e) {
    fail(e.what());
  }
  auto width = [&] { return get<int>(j, "width"); };
  Generator g;
  switch (kind) {
    case Kind::Green:
    case Kind::Red: {
      std::vector<double> phases;
      if (j.contains("phases")) {
        if (!field(j, "phases").is_array()) fail("phases must be an array");
        for (const Json& p : field(j, "phases")) phases.push_back(phase_from_json(p));
      }
      const int k = width();
      if (!phases.empty() && static_cast<int>(phases.size()) != k) fail("phase vector length must equal width");
      g = kind == Kind::Green ? Generator::green(k, get<int>(j, "in"), get<int>(j, "out"), phases)
                              : Generator::red(k, get<int>(j, "in"), get<int>(j, "out"), phases);
      break;
    }
    case Kind::HBox: {
      std::vector<cd> labels;
      if (j.contains("labels")) {
        if (!field(j, "labels").is_array()) fail("labels must be an array");
        for (const Json& z : field(j, "labels")) labels.push_back(label_from_json(z));
      }
      const int k = width();
      if (!labels.empty() && static_cast<int>(labels.size()) != k) fail("label vector length must equal width");
      g = Generator::hbox(k, get<int>(j, "in"), get<int>(j, "out"), labels);
      break;
    }
    case Kind::Divider: g = Generator::divider(width()); break;
    case Kind::Gatherer: g = Generator::gatherer(width()); break;
    case Kind::Identity: g = Generator::identity(width()); break;
    case Kind::Swap: g = Generator::swap(width(), get<int>(j, "width2")); break;
    case Kind::Cup: g = Generator::cup(width()); break;
    case Kind::Cap: g = Generator::cap(width()); break;
    case Kind::Discard: g = Generator::discard(width()); break;
    case Kind::Mix: g = Generator::mix(width()); break;
    case Kind::Star: g = Generator::star(); break;
    case Kind::FunctionArrow: g = Generator::function_arrow(function_from_json(field(j, "function"))); break;
    case Kind::RedArrow: g = Generator::red_arrow(f2_from_json(field(j, "matrix"))); break;
    case Kind::YellowArrow: g = Generator::yellow_arrow(bool_matrix_from_json(field(j, "matrix"))); break;
  }
  if (g.is_arrow()) g.fanned = get_or<bool>(j, "fanned", false);
  g.check();
  return g;
}

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["format"] = std::string(kDiagramFormat);
  j["inputs"] = type_to_json(d.inputs());
  j["outputs"] = type_to_json(d.outputs());
  Json nodes = Json::array();
  for (const auto& [id, g] : d.nodes()) {
    Json n;
    n["id"] = id;
    const Json body = generator_to_json(g);
    for (auto it = body.begin(); it != body.end(); ++it) n[it.key()] = *it;
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& [a, b] : d.edges()) {
    Json e;
    e["a"] = endpoint_to_string(a);
    e["b"] = endpoint_to_string(b);
    e["width"] = d.width(a);
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j;
}

Diagram diagram_from_json(const Json& j) {
  expect_format(j, kDiagramFormat);
  Diagram d(type_from_json(field(j, "inputs")), type_from_json(field(j, "outputs")));
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) fail("nodes must be an array");
  for (const Json& n : nodes) {
    const int id = get<int>(n, "id");
    if (id < 0) fail("node ids must be non-negative");
    if (d.has_node(id)) fail("duplicate node id " + std::to_string(id));
    try {
      d.add_node(id, generator_from_json(n));
    } catch (const SzxError& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      throw SzxError(ErrorCode::ValidationFailed, "node " + std::to_string(id) + ": " + e.what());
    }
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) fail("edges must be an array");
  for (const Json& e : edges) {
    const Endpoint a = endpoint_from_string(get<std::string>(e, "a"));
    const Endpoint b = endpoint_from_string(get<std::string>(e, "b"));
    if (!d.exists(a) || !d.exists(b))
      throw SzxError(ErrorCode::ValidationFailed, "edge " + to_string(a) + " - " + to_string(b) + " names a missing endpoint");
    if (e.contains("width") && get<int>(e, "width") != d.width(a))
      throw SzxError(ErrorCode::ValidationFailed, "edge " + to_string(a) + " - " + to_string(b) + " has the wrong width");
    d.connect(a, b);
  }
  const auto violations = validate(d);
  if (!violations.empty()) throw SzxError(ErrorCode::ValidationFailed, violations.front().message);
  return d;
}

// Rule parameters: only fields differing from the defaults are written.

Json params_to_json(const RuleParams& p) {
  const RuleParams def;
  Json j = Json::object();
  if (p.kind != def.kind) j["kind"] = std::string(kind_tag(p.kind));
  if (p.width != def.width) j["width"] = p.width;
  if (p.width2 != def.width2) j["width2"] = p.width2;
  if (p.n != def.n) j["n"] = p.n;
  if (p.m != def.m) j["m"] = p.m;
  if (p.p != def.p) j["p"] = p.p;
  if (p.q != def.q) j["q"] = p.q;
  if (p.variant != def.variant) j["variant"] = p.variant;
  if (p.x != def.x) j["x"] = p.x;
  auto phases = [](const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(phase_to_json(x));
    return a;
  };
  if (!p.phase.empty()) j["phase"] = phases(p.phase);
  if (!p.phase2.empty()) j["phase2"] = phases(p.phase2);
  if (!p.label.empty()) {
    Json a = Json::array();
    for (cd z : p.label) a.push_back(label_to_json(z));
    j["label"] = a;
  }
  if (!(p.f == def.f)) j["f"] = function_to_json(p.f);
  if (!(p.g == def.g)) j["g"] = function_to_json(p.g);
  if (!(p.a == def.a)) j["a"] = f2_to_json(p.a);
  if (!(p.b == def.b)) j["b"] = f2_to_json(p.b);
  if (!(p.c == def.c)) j["c"] = f2_to_json(p.c);
  if (!(p.d == def.d)) j["d"] = f2_to_json(p.d);
  if (!(p.y == def.y)) j["y"] = bool_matrix_to_json(p.y);
  if (!p.perm.empty()) j["perm"] = p.perm;
  if (!p.types_a.empty()) j["types_a"] = type_to_json(p.types_a);
  if (!p.types_b.empty()) j["types_b"] = type_to_json(p.types_b);
  if (!p.types_c.empty()) j["types_c"] = type_to_json(p.types_c);
  if (p.diagram) j["diagram"] = diagram_to_json(*p.diagram);
  return j;
}

RuleParams params_from_json(const Json& j) {
  if (!j.is_object()) fail("rule parameters must be an object");
  RuleParams p;
  if (j.contains("kind")) {
    try {
      p.kind = kind_from_tag(get<std::string>(j, "kind"));
    } catch (const SzxError& e) {
      fail(e.what());
    }
  }
  p.width = get_or<int>(j, "width", p.width);
  p.width2 = get_or<int>(j, "width2", p.width2);
  p.n = get_or<int>(j, "n", p.n);
  p.m = get_or<int>(j, "m", p.m);
  p.p = get_or<int>(j, "p", p.p);
  p.q = get_or<int>(j, "q", p.q);
  p.variant = get_or<int>(j, "variant", p.variant);
  if (j.contains("x")) p.x = word_from_json(j["x"]);
  auto phases = [&](const char* key) {
    std::vector<double> v;
    if (!j.contains(key)) return v;
    if (!j[key].is_array()) fail(std::string(key) + " must be an array");
    for (const Json& x : j[key]) v.push_back(phase_from_json(x));
    return v;
  };
  p.phase = phases("phase");
  p.phase2 = phases("phase2");
  if (j.contains("label")) {
    if (!j["label"].is_array()) fail("label must be an array");
    for (const Json& z : j["label"]) p.label.push_back(label_from_json(z));
  }
  if (j.contains("f")) p.f = function_from_json(j["f"]);
  if (j.contains("g")) p.g = function_from_json(j["g"]);
  if (j.contains("a")) p.a = f2_from_json(j["a"]);
  if (j.contains("b")) p.b = f2_from_json(j["b"]);
  if (j.contains("c")) p.c = f2_from_json(j["c"]);
  if (j.contains("d")) p.d = f2_from_json(j["d"]);
  if (j.contains("y")) p.y = bool_matrix_from_json(j["y"]);
  if (j.contains("perm")) p.perm = get<std::vector<int>>(j, "perm");
  if (j.contains("types_a")) p.types_a = type_from_json(j["types_a"]);
  if (j.contains("types_b")) p.types_b = type_from_json(j["types_b"]);
  if (j.contains("types_c")) p.types_c = type_from_json(j["types_c"]);
  if (j.contains("diagram")) p.diagram = diagram_from_json(j["diagram"]);
  return p;
}

Json anchor_to_json(const Anchor& a) {
  Json j;
  Json nodes = Json::array();
  for (const auto& [from, to] : a.nodes) nodes.push_back(Json::array({from, to}));
  j["nodes"] = nodes;
  if (!a.boundary.empty()) {
    Json b = Json::array();
    for (const auto& e : a.boundary) b.push_back(e ? Json(endpoint_to_string(*e)) : Json(nullptr));
    j["boundary"] = b;
  }
  return j;
}

Anchor anchor_from_json(const Json& j) {
  Anchor a;
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) fail("anchor nodes must be an array of [pattern, target] pairs");
  for (const Json& pair : nodes) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
      fail("anchor nodes must be [pattern, target] integer pairs");
    a.nodes[pair[0].get<int>()] = pair[1].get<int>();
  }
  if (j.contains("boundary")) {
    if (!j["boundary"].is_array()) fail("anchor boundary must be an array");
    for (const Json& e : j["boundary"]) {
      if (e.is_null()) a.boundary.emplace_back(std::nullopt);
      else if (e.is_string()) a.boundary.emplace_back(endpoint_from_string(e.get<std::string>()));
      else fail("anchor boundary entries are endpoint strings or null");
    }
  }
  return a;
}

Json proof_to_json(const ProofScript& s) {
  Json j;
  j["format"] = std::string(kProofFormat);
  j["name"] = s.name;
  j["description"] = s.description;
  j["oracle_axioms"] = s.oracle_axioms;
  j["start"] = diagram_to_json(s.start);
  Json steps = Json::array();
  for (const ProofStep& st : s.steps) {
    Json x;
    if (st.type == ProofStep::Type::ScalarFix) {
      x["type"] = "scalar";
      x["quarter_exp"] = st.quarter_exp;
      Json remove = Json::array();
      for (const auto& [k, v] : st.anchor.nodes) remove.push_back(v);
      x["remove"] = remove;
    } else {
      x["type"] = "rule";
      x["rule"] = st.rule;
      x["direction"] = std::string(to_string(st.direction));
      x["params"] = params_to_json(st.params);
      x["anchor"] = anchor_to_json(st.anchor);
    }
    if (!st.note.empty()) x["note"] = st.note;
    x["expect"] = st.expect ? diagram_to_json(*st.expect) : Json(nullptr);
    steps.push_back(x);
  }
  j["steps"] = steps;
  j["end"] = diagram_to_json(s.end);
  return j;
}

ProofScript proof_from_json(const Json& j) {
  expect_format(j, kProofFormat);
  ProofScript s;
  s.name = get<std::string>(j, "name");
  s.description = get_or<std::string>(j, "description", "");
  s.oracle_axioms = get_or<std::vector<std::string>>(j, "oracle_axioms", {});
  s.start = diagram_from_json(field(j, "start"));
  s.end = diagram_from_json(field(j, "end"));
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) fail("steps must be an array");
  for (const Json& x : steps) {
    ProofStep st;
    const std::string type = get_or<std::string>(x, "type", "rule");
    if (type == "scalar") {
      st.type = ProofStep::Type::ScalarFix;
      st.quarter_exp = get<int>(x, "quarter_exp");
      int i = 0;
      for (int id : get_or<std::vector<int>>(x, "remove", {})) st.anchor.nodes[i++] = id;
    } else if (type == "rule") {
      st.rule = get<std::string>(x, "rule");
      try {
        st.direction = direction_from_string(get_or<std::string>(x, "direction", "ltr"));
      } catch (const SzxError& e) {
        fail(e.what());
      }
      st.params = params_from_json(x.contains("params") ? x["params"] : Json::object());
      st.anchor = anchor_from_json(field(x, "anchor"));
    } else {
      fail("step type must be 'rule' or 'scalar', got '" + type + "'");
    }
    st.note = get_or<std::string>(x, "note", "");
    if (x.contains("expect") && !x["expect"].is_null()) st.expect = diagram_from_json(x["expect"]);
    s.steps.push_back(std::move(st));
  }
  return s;
}

Json instance_to_json(const AlgorithmInstance& inst) {
  Json j;
  j["format"] = std::string(kInstanceFormat);
  j["kind"] = std::string(to_string(inst.kind));
  j["n"] = inst.n;
  j["m"] = inst.f.m();
  switch (inst.kind) {
    case AlgorithmKind::BV:
    case AlgorithmKind::Simon: j["s"] = word_to_json(inst.s, inst.n); break;
    case AlgorithmKind::Grover:
      j["x"] = word_to_json(inst.x, inst.n);
      j["k"] = inst.k;
      break;
    case AlgorithmKind::DJ: break;
  }
  j["f"] = function_to_json(inst.f);
  return j;
}

AlgorithmInstance instance_from_json(const Json& j) {
  expect_format(j, kInstanceFormat);
  AlgorithmInstance inst;
  try {
    inst.kind = algorithm_from_string(get<std::string>(j, "kind"));
  } catch (const SzxError& e) {
    fail(e.what());
  }
  inst.n = get<int>(j, "n");
  if (inst.n < 0 || inst.n > 20) fail("n out of range");
  inst.m = get_or<int>(j, "m", inst.kind == AlgorithmKind::Simon ? inst.n : 1);
  if (j.contains("s")) inst.s = word_from_json(j["s"]);
  if (j.contains("x")) inst.x = word_from_json(j["x"]);
  inst.k = get_or<int>(j, "k", 0);
  if (j.contains("f")) {
    inst.f = function_from_json(j["f"]);
  } else {
    switch (inst.kind) {
      case AlgorithmKind::BV: inst.f = bv_function(inst.s, inst.n); break;
      case AlgorithmKind::Simon: inst.f = simon_function(inst.n, inst.s); break;
      case AlgorithmKind::Grover: inst.f = BooleanFunction::point(inst.n, inst.x); break;
      case AlgorithmKind::DJ: fail("a Deutsch-Jozsa instance needs its function table");
    }
  }
  inst.m = inst.f.m();
  check_instance(inst);
  return inst;
}

Json report_to_json(const VerifyReport& r) {
  Json j;
  j["format"] = std::string(kReportFormat);
  j["algorithm"] = r.algorithm;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json x;
    x["name"] = c.name;
    x["passed"] = c.passed;
    x["measured"] = c.measured;
    x["expected"] = c.expected;
    x["tolerance"] = c.tolerance;
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

Json proof_report_to_json(const ProofReport& r) {
  Json j;
  j["format"] = std::string(kReportFormat);
  j["proof"] = r.name;
  j["passed"] = r.passed();
  j["end_structural"] = r.end_structural;
  j["end_semantic"] = r.end_semantic;
  j["scalar_fixes"] = r.scalar_fixes;
  Json steps = Json::array();
  for (const StepReport& s : r.steps) {
    Json x;
    x["index"] = s.index;
    x["rule"] = s.rule;
    x["status"] = std::string(to_string(s.status));
    x["distance"] = s.distance;
    if (s.scalar_fix) x["quarter_exp"] = s.quarter_exp;
    if (!s.message.empty()) x["message"] = s.message;
    steps.push_back(x);
  }
  j["steps"] = steps;
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace szx
