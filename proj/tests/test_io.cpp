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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "szx/export.hpp"
#include "szx/io.hpp"
#include "szx/oracles.hpp"
#include "szx/scalable.hpp"
#include "szx/scripts.hpp"
#include "szx/semantics.hpp"

namespace szx {
namespace {

constexpr double kPi = std::numbers::pi;

Diagram round_trip(const Diagram& d) { return diagram_from_json(parse_json(diagram_to_json(d).dump())); }

TEST(Io, PhaseEncoding) {
  EXPECT_EQ(phase_to_json(0.0), Json("0"));
  EXPECT_EQ(phase_to_json(kPi), Json("1"));
  EXPECT_EQ(phase_to_json(kPi / 4), Json("1/4"));
  EXPECT_EQ(phase_to_json(-3 * kPi / 8), Json("-3/8"));
  EXPECT_EQ(phase_to_json(2 * kPi / 3), Json("2/3"));
  EXPECT_TRUE(phase_to_json(0.1234).is_number());
  EXPECT_DOUBLE_EQ(phase_from_json(Json("1/2")), kPi / 2);
  EXPECT_DOUBLE_EQ(phase_from_json(Json(0.5)), 0.5);
  EXPECT_THROW(phase_from_json(Json("pi/2")), SzxError);
  EXPECT_THROW(phase_from_json(Json("1/0")), SzxError);
}

TEST(Io, PhaseRoundTripIsExact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 2000; ++i) {
    const double a = i % 2 ? u(rng) : kPi * static_cast<double>(static_cast<int>(u(rng) * 10)) / 16;
    EXPECT_EQ(phase_from_json(parse_json(phase_to_json(a).dump())), a);
  }
}

TEST(Io, EndpointStrings) {
  for (const Endpoint e : {Endpoint::input(0), Endpoint::output(3), Endpoint::in_port(7, 1), Endpoint::out_port(12, 0)})
    EXPECT_EQ(endpoint_from_string(endpoint_to_string(e)), e);
  EXPECT_EQ(endpoint_to_string(Endpoint::in_port(3, 0)), "3:i0");
  EXPECT_THROW(endpoint_from_string("3:x0"), SzxError);
  EXPECT_THROW(endpoint_from_string("in:"), SzxError);
  EXPECT_THROW(endpoint_from_string("bogus"), SzxError);
}

TEST(Io, RandomDiagramsRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Diagram d = oracle::random_diagram(rng, 6, i % 3 == 0);
    const Diagram back = round_trip(d);
    EXPECT_TRUE(back == d) << diagram_to_json(d).dump();
    EXPECT_EQ(diagram_to_json(back).dump(), diagram_to_json(d).dump());
  }
}

TEST(Io, EveryGeneratorKindRoundTrips) {
  const BooleanFunction f(2, 2, {1, 3, 0, 2});
  std::vector<Generator> gens = {
      Generator::green(2, 1, 2, {kPi / 2, 0.3}),
      Generator::red(1, 0, 1, {kPi}),
      Generator::hbox(2, 1, 1, {cd(0.5, -0.25), cd(2, 0)}),
      Generator::divider(3),
      Generator::gatherer(2),
      Generator::identity(2),
      Generator::swap(1, 2),
      Generator::cup(2),
      Generator::cap(1),
      Generator::discard(2),
      Generator::mix(1),
      Generator::star(),
      Generator::function_arrow(f),
      Generator::red_arrow(F2Matrix(2, 3, {0b101, 0b011})),
      Generator::yellow_arrow(BoolMatrix(2, 2, {0b10, 0b11})),
  };
  for (const Generator& g : gens) {
    const Diagram d = from_generator(g);
    EXPECT_TRUE(round_trip(d) == d) << g.describe();
    EXPECT_TRUE(generator_from_json(generator_to_json(g)).same(g)) << g.describe();
  }
}

TEST(Io, SemanticsSurviveRoundTrip) {
  for (const char* gate : {"H", "CNot", "Toffoli"}) {
    const Diagram d = build_gate(gate);
    EXPECT_TRUE(equal_semantics(round_trip(d), d)) << gate;
  }
  const Diagram it = iterate(from_generator(Generator::red(1, 1, 1, {kPi / 4})), 2);
  EXPECT_TRUE(round_trip(it) == it);
}

TEST(Io, MalformedDiagramsAreRejected) {
  Json j = diagram_to_json(build_gate("H"));
  auto code_of = [](const Json& doc) {
    try {
      diagram_from_json(doc);
    } catch (const SzxError& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  Json wrong_format = j;
  wrong_format["format"] = "other/1";
  EXPECT_EQ(code_of(wrong_format), ErrorCode::ParseError);
  Json dangling = j;
  dangling["edges"].erase(0);
  EXPECT_EQ(code_of(dangling), ErrorCode::ValidationFailed);
  Json bad_kind = j;
  bad_kind["nodes"][0]["kind"] = "purple";
  EXPECT_EQ(code_of(bad_kind), ErrorCode::ParseError);
  Json missing = j;
  missing.erase("nodes");
  EXPECT_EQ(code_of(missing), ErrorCode::ParseError);
  Json bad_width = j;
  bad_width["edges"][0]["width"] = 3;
  EXPECT_EQ(code_of(bad_width), ErrorCode::ValidationFailed);
  EXPECT_THROW(parse_json("{not json"), SzxError);
}

TEST(Io, ProofScriptsRoundTrip) {
  for (const BundledScript& b : bundled_scripts()) {
    const Json j = proof_to_json(b.script);
    const ProofScript back = proof_from_json(parse_json(j.dump()));
    EXPECT_EQ(proof_to_json(back).dump(), j.dump()) << b.file;
    ASSERT_EQ(back.steps.size(), b.script.steps.size());
    for (std::size_t i = 0; i < back.steps.size(); ++i) EXPECT_TRUE(back.steps[i].params == b.script.steps[i].params) << b.file << " " << i;
    EXPECT_TRUE(check_proof(back).passed()) << b.file;
  }
}

TEST(Io, ParamsRoundTrip) {
  RuleParams p;
  p.kind = Kind::Red;
  p.width = 3;
  p.x = 5;
  p.phase = {kPi / 2, 0.7};
  p.label = {cd(1, 2)};
  p.f = BooleanFunction(1, 1, {1, 0});
  p.a = F2Matrix(2, 2, {0b10, 0b01});
  p.perm = {1, 0};
  p.types_a = TypeList({2, 1});
  p.diagram = build_gate("H");
  EXPECT_TRUE(params_from_json(parse_json(params_to_json(p).dump())) == p);
  EXPECT_TRUE(params_to_json(RuleParams{}).empty());
}

TEST(Io, InstancesRoundTrip) {
  const std::vector<AlgorithmInstance> insts = {
      {AlgorithmKind::BV, 3, 1, 0b101, 0, 0, bv_function(0b101, 3)},
      {AlgorithmKind::DJ, 2, 1, 0, 0, 0, BooleanFunction(2, 1, {0, 1, 1, 0})},
      {AlgorithmKind::Simon, 3, 3, 0b110, 0, 0, simon_function(3, 0b110)},
      {AlgorithmKind::Grover, 3, 1, 0, 0b011, 2, BooleanFunction::point(3, 0b011)},
  };
  for (const AlgorithmInstance& inst : insts) {
    const AlgorithmInstance back = instance_from_json(parse_json(instance_to_json(inst).dump()));
    EXPECT_EQ(back.kind, inst.kind);
    EXPECT_EQ(back.n, inst.n);
    EXPECT_EQ(back.s, inst.s);
    EXPECT_EQ(back.x, inst.x);
    EXPECT_EQ(back.k, inst.k);
    EXPECT_TRUE(back.f == inst.f);
  }
}

TEST(Io, InstanceWithoutTableAndPromiseViolation) {
  Json j = parse_json(R"({"format":"szx-instance/1","kind":"bv","n":3,"s":"101"})");
  const AlgorithmInstance inst = instance_from_json(j);
  EXPECT_TRUE(inst.f == bv_function(0b101, 3));
  j["f"] = function_to_json(BooleanFunction(3, 1, {0, 0, 0, 1, 0, 0, 0, 1}));
  try {
    instance_from_json(j);
    FAIL() << "expected a promise violation";
  } catch (const SzxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PromiseViolated);
  }
}

TEST(Io, ReportJson) {
  const VerifyReport r = verify_bv(2, 0b10, Tolerance{});
  const Json j = report_to_json(r);
  EXPECT_EQ(j["format"], "szx-report/1");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  const Json p = proof_report_to_json(check_proof(bundled_scripts().front().script));
  EXPECT_EQ(p["passed"], true);
}

TEST(Export, IdentityDot) {
  const std::string dot = to_dot(identity(TypeList({1})));
  EXPECT_NE(dot.find("in0"), std::string::npos);
  EXPECT_NE(dot.find("out0"), std::string::npos);
  EXPECT_NE(dot.find("in0 -- out0"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 7);
}

TEST(Export, DeterministicAndComplete) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Diagram d = oracle::random_diagram(rng, 5);
    EXPECT_EQ(to_dot(d), to_dot(d));
    EXPECT_EQ(to_tikz(d), to_tikz(d));
    const std::string dot = to_dot(d);
    std::size_t edges = 0;
    for (auto pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
    EXPECT_EQ(edges, d.edges().size());
    for (const auto& [id, g] : d.nodes()) EXPECT_NE(dot.find("n" + std::to_string(id) + " ["), std::string::npos);
  }
}

TEST(Export, LabelsShowPhases) {
  EXPECT_EQ(node_label(Generator::green(1, 1, 1, {kPi / 2})), "green[1] 1->1 (pi/2)");
  EXPECT_EQ(node_label(Generator::red(1, 1, 1, {kPi})), "red[1] 1->1 (pi)");
  EXPECT_EQ(node_label(Generator::green(1, 1, 1)), "green[1] 1->1");
  const std::string tikz = to_tikz(build_gate("CNot"));
  EXPECT_NE(tikz.find("\\begin{tikzpicture}"), std::string::npos);
  EXPECT_NE(tikz.find("\\end{tikzpicture}"), std::string::npos);
}

}  // namespace
}  // namespace szx
