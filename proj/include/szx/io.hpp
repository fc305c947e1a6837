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

// JSON documents: diagrams, proof scripts, algorithm instances and reports.
//
// Every document carries a "format" field: "szx-diagram/1", "szx-proof/1",
// "szx-instance/1" or "szx-report/1". Phases are strings "p/q" in units of pi
// when the value is exactly such a multiple (up to rounding), radians as JSON
// numbers otherwise. Endpoints are written "in:0", "out:1", "3:i0", "3:o1".

#include <string>
#include <string_view>

#include <json.hpp>

#include "szx/algorithms.hpp"
#include "szx/diagram.hpp"
#include "szx/rewrite.hpp"

namespace szx {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kDiagramFormat = "szx-diagram/1";
inline constexpr std::string_view kProofFormat = "szx-proof/1";
inline constexpr std::string_view kInstanceFormat = "szx-instance/1";
inline constexpr std::string_view kReportFormat = "szx-report/1";

Json phase_to_json(double a);
double phase_from_json(const Json& j);

std::string endpoint_to_string(const Endpoint& e);
Endpoint endpoint_from_string(std::string_view s);

Json function_to_json(const BooleanFunction& f);
BooleanFunction function_from_json(const Json& j);
Json f2_to_json(const F2Matrix& a);
F2Matrix f2_from_json(const Json& j);
Json bool_matrix_to_json(const BoolMatrix& a);
BoolMatrix bool_matrix_from_json(const Json& j);

Json generator_to_json(const Generator& g);
Generator generator_from_json(const Json& j);

/// Throws ParseError on malformed documents and ValidationFailed when the
/// document describes an ill-formed diagram.
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json params_to_json(const RuleParams& p);
RuleParams params_from_json(const Json& j);
Json anchor_to_json(const Anchor& a);
Anchor anchor_from_json(const Json& j);
Json proof_to_json(const ProofScript& s);
ProofScript proof_from_json(const Json& j);

Json instance_to_json(const AlgorithmInstance& inst);
/// A missing function table is filled in from the promise data; the
/// instance is checked with check_instance.
AlgorithmInstance instance_from_json(const Json& j);

Json report_to_json(const VerifyReport& r);
Json proof_report_to_json(const ProofReport& r);

/// Parses text; throws ParseError with the parser's message.
Json parse_json(std::string_view text);
/// Reads a file, or stdin for "-". Throws ParseError when unreadable.
std::string read_text(const std::string& path);

}  // namespace szx
