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

// szx: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "szx/acceptance.hpp"
#include "szx/algorithms.hpp"
#include "szx/export.hpp"
#include "szx/io.hpp"
#include "szx/oracles.hpp"
#include "szx/scalable.hpp"
#include "szx/scripts.hpp"
#include "szx/semantics.hpp"

namespace {

using namespace szx;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("SZX_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && end != s) return v;
    throw SzxError(ErrorCode::ParseError, std::string("SZX_SEED must be an unsigned integer, got '") + s + "'");
  }
  return kDefaultSeed;
}

Diagram load_diagram(const std::string& path) { return diagram_from_json(parse_json(read_text(path))); }

std::string number(double v) {
  if (std::abs(v) < 1e-15) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string complex_text(cd z) {
  if (std::abs(z.imag()) < 1e-15) return number(z.real());
  if (std::abs(z.real()) < 1e-15) return number(z.imag()) + "i";
  return number(z.real()) + (z.imag() < 0 ? "-" : "+") + number(std::abs(z.imag())) + "i";
}

void print_matrix(const CMatrix& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      cells[i].push_back(complex_text(m(i, j)));
      width = std::max(width, cells[i].back().size());
    }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += "  ";
      line += std::string(width - row[j].size(), ' ') + row[j];
    }
    std::cout << line << "\n";
  }
}

Json matrix_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

void print_report(const VerifyReport& r) {
  for (const CheckResult& c : r.checks) {
    std::cout << (c.passed ? "  pass  " : "  FAIL  ") << c.name << ": measured " << number(c.measured) << ", expected "
              << number(c.expected) << ", tol " << number(c.tolerance);
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << r.algorithm << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

// interpret

struct InterpretArgs {
  std::string file;
  bool pure = false;
  bool cpm = false;
  bool json = false;
};

// Without a flag: the pure matrix V, except for mixed diagrams and scalars,
// whose value is the CPM one (a scalar's V carries an invisible phase).
int cmd_interpret(const InterpretArgs& a) {
  const Diagram d = load_diagram(a.file);
  const bool scalar = d.inputs().size() == 0 && d.outputs().size() == 0;
  const bool cpm = a.cpm || !d.is_pure() || (scalar && !a.pure);
  CMatrix m;
  int scale = 0;
  if (cpm) {
    const Superoperator s = interp_cpm(d);
    m = s.resolved();
    scale = s.scale;
  } else {
    const Matrix v = interp_pure(d);
    m = v.resolved();
    scale = v.scale;
  }
  if (a.json) {
    Json j;
    j["format"] = "szx-matrix/1";
    j["interpretation"] = cpm ? "cpm" : "pure";
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["scale_quarter_exp"] = scale;
    j["entries"] = matrix_json(m);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (cpm ? "cpm " : "pure ") << m.rows() << "x" << m.cols() << " (scale 2^(" << scale << "/4) applied)\n";
    print_matrix(m);
  }
  return kOk;
}

// check-eq

int cmd_check_eq(const std::string& fa, const std::string& fb, double tol, bool json) {
  const Diagram a = load_diagram(fa);
  const Diagram b = load_diagram(fb);
  const bool eq = equal_semantics(a, b, Tolerance{tol, tol});
  const double dist = semantic_distance(a, b);
  VerifyReport r;
  r.algorithm = "check-eq";
  r.add("superoperator distance", dist, 0.0, tol);
  r.checks.back().passed = eq;
  if (json) std::cout << report_to_json(r).dump(2) << "\n";
  else std::cout << (eq ? "equal" : "not equal") << " (max entry difference " << number(dist) << ")\n";
  return eq ? kOk : kFailed;
}

// verify

struct VerifyArgs {
  std::string algorithm;
  std::string instance;
  int n = -1;
  int m = -1;
  std::string s;
  std::string x;
  int k = -1;
  std::string f;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool json = false;
};

std::vector<Word> parse_table(const std::string& text) {
  std::vector<Word> t;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      t.push_back(v);
    } catch (const std::logic_error&) {
      throw SzxError(ErrorCode::ParseError, "bad truth-table entry '" + item + "'");
    }
  }
  return t;
}

Word parse_bits(const std::string& s, int n, const char* what) {
  if (static_cast<int>(s.size()) != n || s.find_first_not_of("01") != std::string::npos)
    throw SzxError(ErrorCode::ParseError, std::string(what) + " must be a bit string of length n");
  return word_from_string(s);
}

AlgorithmInstance instance_from_flags(const VerifyArgs& a) {
  AlgorithmInstance inst;
  inst.kind = algorithm_from_string(a.algorithm);
  if (a.n < 0) throw SzxError(ErrorCode::ParseError, "--n is required without an instance file");
  inst.n = a.n;
  if (inst.n > 20) throw SzxError(ErrorCode::InvalidArgument, "n must be at most 20");
  std::optional<BooleanFunction> f;
  if (!a.f.empty()) {
    const std::vector<Word> table = parse_table(a.f);
    const int m = a.m > 0 ? a.m : (inst.kind == AlgorithmKind::Simon ? inst.n : 1);
    if (table.size() != (std::size_t{1} << inst.n)) throw SzxError(ErrorCode::ParseError, "--f needs 2^n entries");
    for (Word v : table)
      if ((v >> m) != 0) throw SzxError(ErrorCode::ParseError, "--f entry exceeds m bits");
    f = BooleanFunction(inst.n, m, table);
  }
  std::mt19937_64 rng(a.seed);
  switch (inst.kind) {
    case AlgorithmKind::BV:
      inst.s = a.s.empty() ? 0 : parse_bits(a.s, inst.n, "--s");
      inst.f = f ? *f : bv_function(inst.s, inst.n);
      break;
    case AlgorithmKind::DJ:
      if (!f) throw SzxError(ErrorCode::ParseError, "dj needs --f (comma-separated truth table)");
      inst.f = *f;
      break;
    case AlgorithmKind::Simon:
      if (a.s.empty()) throw SzxError(ErrorCode::ParseError, "simon needs --s");
      inst.s = parse_bits(a.s, inst.n, "--s");
      inst.f = f ? *f : simon_function(inst.n, inst.s);
      break;
    case AlgorithmKind::Grover:
      if (inst.n < 1) throw SzxError(ErrorCode::Degenerate, "grover needs n >= 1");
      inst.x = a.x.empty() ? rng() % (Word{1} << inst.n) : parse_bits(a.x, inst.n, "--x");
      inst.f = f ? *f : BooleanFunction::point(inst.n, inst.x);
      break;
  }
  inst.m = inst.f.m();
  inst.k = a.k >= 0 ? a.k : (inst.kind == AlgorithmKind::Grover ? optimal_k(inst.n) : 0);
  check_instance(inst);
  return inst;
}

// Simon's classical part: sample until the rows reach rank n - 1.
void simon_sampling(const AlgorithmInstance& inst, std::uint64_t seed, VerifyReport& r) {
  const std::vector<double> dist = outcome_distribution(build_simon(inst.f));
  std::mt19937_64 rng(seed);
  std::vector<Word> samples;
  std::optional<Word> got;
  for (int draw = 0; draw < 64 * inst.n && !got; ++draw) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    Word y = 0;
    while (y + 1 < dist.size() && u >= dist[y]) u -= dist[y++];
    samples.push_back(y);
    got = simon_recover_s(samples, inst.n);
  }
  r.add_flag("recover s from samples", got == inst.s,
             std::to_string(samples.size()) + " samples" + (got ? ", found " + word_to_string(*got, inst.n) : ""));
}

int cmd_verify(const VerifyArgs& a) {
  AlgorithmInstance inst;
  if (!a.instance.empty()) {
    inst = instance_from_json(parse_json(read_text(a.instance)));
    if (!a.algorithm.empty() && algorithm_from_string(a.algorithm) != inst.kind)
      throw SzxError(ErrorCode::InvalidArgument, "instance file is a " + std::string(to_string(inst.kind)) + " instance");
    if (a.k >= 0) inst.k = a.k;
  } else {
    inst = instance_from_flags(a);
  }
  VerifyReport r = verify_instance(inst, Tolerance{a.tol, a.tol});
  if (inst.kind == AlgorithmKind::Simon) simon_sampling(inst, a.seed, r);
  if (a.json) {
    Json j = report_to_json(r);
    j["instance"] = instance_to_json(inst);
    j["seed"] = a.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(inst.kind) << " n=" << inst.n;
    if (inst.kind == AlgorithmKind::BV || inst.kind == AlgorithmKind::Simon) std::cout << " s=" << word_to_string(inst.s, inst.n);
    if (inst.kind == AlgorithmKind::Grover)
      std::cout << " x=" << word_to_string(inst.x, inst.n) << " k=" << inst.k << " P=" << number(grover_success_prob(inst.n, inst.k));
    std::cout << "\n";
    print_report(r);
  }
  return r.passed() ? kOk : kFailed;
}

// check-proof

int cmd_check_proof(const std::string& file, double tol, bool json) {
  const ProofScript script = proof_from_json(parse_json(read_text(file)));
  const ProofReport r = check_proof(script, Tolerance{tol, tol});
  if (json) {
    std::cout << proof_report_to_json(r).dump(2) << "\n";
  } else {
    std::cout << "proof " << r.name << "\n";
    for (const StepReport& s : r.steps) {
      std::cout << "  step " << s.index << " " << (s.status == StepStatus::Passed ? "pass" : "FAIL") << " " << s.rule << " ["
                << to_string(s.status) << "]";
      if (!s.message.empty()) std::cout << ": " << s.message;
      std::cout << "\n";
    }
    std::cout << "  end " << (r.end_structural ? "matches" : "does not match") << " structurally, "
              << (r.end_semantic ? "equal" : "not equal") << " semantically\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  return r.passed() ? kOk : kFailed;
}

// export

int cmd_export(const std::string& file, bool tikz, const std::string& out) {
  const Diagram d = load_diagram(file);
  const std::string text = tikz ? to_tikz(d) : to_dot(d);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream o(out);
    if (!o) throw SzxError(ErrorCode::ParseError, "cannot write '" + out + "'");
    o << text;
  }
  return kOk;
}

// suite

int cmd_suite(const std::string& filter, std::uint64_t seed, bool json, bool timings, int jobs) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.filter = filter;
  opt.jobs = jobs;
  const SuiteReport r = run_suite(opt);
  if (r.criteria.empty()) throw SzxError(ErrorCode::InvalidArgument, "filter '" + filter + "' selects no criterion");
  if (json) {
    std::cout << suite_to_json(r, timings).dump(2) << "\n";
  } else {
    for (const CriterionResult& c : r.criteria) std::cout << format_result(c, timings) << "\n";
    std::cout << (r.passed() ? "suite: PASS" : "suite: FAIL") << "\n";
  }
  return r.passed() ? kOk : kFailed;
}

// bundle

void write_json(const std::filesystem::path& path, const Json& j) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream o(path);
  if (!o) throw SzxError(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
  o << j.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

int cmd_bundle(const std::string& out) {
  const std::filesystem::path root(out);
  for (const BundledScript& b : bundled_scripts()) write_json(root / "proofs" / b.file, proof_to_json(b.script));

  const std::vector<std::pair<std::string, AlgorithmInstance>> instances = {
      {"bv-101.json", {AlgorithmKind::BV, 3, 1, 0b101, 0, 0, bv_function(0b101, 3)}},
      {"dj-balanced.json", {AlgorithmKind::DJ, 2, 1, 0, 0, 0, BooleanFunction(2, 1, {0, 1, 0, 1})}},
      {"dj-constant.json", {AlgorithmKind::DJ, 3, 2, 0, 0, 0, BooleanFunction::constant(3, 2, 2)}},
      {"simon-11.json", {AlgorithmKind::Simon, 2, 2, 0b11, 0, 0, BooleanFunction(2, 2, {0, 1, 1, 0})}},
      {"simon-110.json", {AlgorithmKind::Simon, 3, 3, 0b110, 0, 0, simon_function(3, 0b110)}},
      {"grover-2.json", {AlgorithmKind::Grover, 2, 1, 0, 0b10, 1, BooleanFunction::point(2, 0b10)}},
      {"grover-4.json", {AlgorithmKind::Grover, 4, 1, 0, 0b0110, 3, BooleanFunction::point(4, 0b0110)}},
  };
  for (const auto& [file, inst] : instances) {
    check_instance(inst);
    write_json(root / "instances" / file, instance_to_json(inst));
  }

  const Diagram f = from_generator(Generator::red(1, 1, 1, {std::numbers::pi / 4}));
  const std::vector<std::pair<std::string, Diagram>> diagrams = {
      {"h.json", build_gate("H")},
      {"not.json", build_gate("Not")},
      {"cnot.json", build_gate("CNot")},
      {"toffoli.json", build_gate("Toffoli")},
      {"zero.json", build_state("0")},
      {"one.json", build_state("1")},
      {"plus.json", build_state("+")},
      {"star.json", from_generator(Generator::star())},
      {"empty.json", empty_diagram()},
      {"identity.json", identity(TypeList{1})},
      {"identity-2.json", identity(TypeList{2})},
      {"divider-gatherer.json", compose(divider(1), gatherer(1))},
      {"iterate-2.json", iterate(f, 2)},
      {"unroll-2.json", unroll(f, 2)},
      {"oracle-and.json", quantum_oracle(BooleanFunction(2, 1, {0, 0, 0, 1}))},
  };
  for (const auto& [file, d] : diagrams) write_json(root / "diagrams" / file, diagram_to_json(d));
  return kOk;
}

// list-rules

int cmd_list_rules(bool json) {
  const std::vector<RuleInfo> rules = list_rules();
  if (json) {
    Json a = Json::array();
    for (const RuleInfo& r : rules) {
      Json x;
      x["name"] = r.name;
      x["summary"] = r.summary;
      x["params"] = r.schema;
      x["conditional"] = r.conditional;
      a.push_back(x);
    }
    std::cout << a.dump(2) << "\n";
    return kOk;
  }
  std::size_t width = 0;
  for (const RuleInfo& r : rules) width = std::max(width, r.name.size());
  for (const RuleInfo& r : rules)
    std::cout << r.name << std::string(width - r.name.size() + 2, ' ') << (r.conditional ? "[axiom] " : "") << r.summary << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"szx: scalable ZX diagrams, interpretation, rewriting and algorithm verification"};
  app.require_subcommand(1);
  int status = kOk;
  std::function<int()> action;

  InterpretArgs ia;
  auto* interpret = app.add_subcommand("interpret", "Print the interpretation of a diagram document");
  interpret->add_option("file", ia.file, "Diagram document, '-' for stdin")->required();
  auto* pure_flag = interpret->add_flag("--pure", ia.pure, "Pure matrix V (default for pure non-scalar diagrams)");
  interpret->add_flag("--cpm", ia.cpm, "Superoperator on column-stacked density matrices")->excludes(pure_flag);
  interpret->add_flag("--json", ia.json, "Machine-readable output");
  interpret->callback([&] { action = [&] { return cmd_interpret(ia); }; });

  std::string eq_a, eq_b;
  double eq_tol = 1e-9;
  bool eq_json = false;
  auto* check_eq = app.add_subcommand("check-eq", "Decide semantic equality of two diagram documents");
  check_eq->add_option("a", eq_a, "First diagram")->required();
  check_eq->add_option("b", eq_b, "Second diagram")->required();
  check_eq->add_option("--tol", eq_tol, "Absolute and relative tolerance")->capture_default_str();
  check_eq->add_flag("--json", eq_json, "Machine-readable output");
  check_eq->callback([&] { action = [&] { return cmd_check_eq(eq_a, eq_b, eq_tol, eq_json); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify an algorithm instance (bv, dj, simon, grover)");
  verify->add_option("algorithm", va.algorithm, "Algorithm name")->required();
  verify->add_option("instance", va.instance, "Instance document, '-' for stdin");
  verify->add_option("--n", va.n, "Number of input bits");
  verify->add_option("--m", va.m, "Output bits of --f");
  verify->add_option("--s", va.s, "Secret or period as a bit string");
  verify->add_option("--x", va.x, "Marked element as a bit string (default drawn from the seed)");
  verify->add_option("--k", va.k, "Grover iterations (default optimal_k)");
  verify->add_option("--f", va.f, "Truth table, comma-separated integers");
  verify->add_option("--tol", va.tol, "Tolerance")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed (default SZX_SEED)");
  verify->add_flag("--json", va.json, "Machine-readable report");
  verify->callback([&] { action = [&] { return cmd_verify(va); }; });

  std::string proof_file;
  double proof_tol = 1e-9;
  bool proof_json = false;
  auto* proof = app.add_subcommand("check-proof", "Replay a proof script");
  proof->add_option("file", proof_file, "Proof document, '-' for stdin")->required();
  proof->add_option("--tol", proof_tol, "Tolerance")->capture_default_str();
  proof->add_flag("--json", proof_json, "Machine-readable report");
  proof->callback([&] { action = [&] { return cmd_check_proof(proof_file, proof_tol, proof_json); }; });

  std::string export_file, export_out;
  bool tikz = false;
  auto* exp = app.add_subcommand("export", "Export a diagram as Graphviz or TikZ");
  exp->add_option("file", export_file, "Diagram document, '-' for stdin")->required();
  auto* dot_flag = exp->add_flag("--dot", "Graphviz output (default)");
  exp->add_flag("--tikz", tikz, "TikZ output")->excludes(dot_flag);
  exp->add_option("-o,--output", export_out, "Output file (default stdout)");
  exp->callback([&] { action = [&] { return cmd_export(export_file, tikz, export_out); }; });

  std::string filter;
  std::uint64_t suite_seed = 0;
  bool suite_json = false, timings = false;
  int jobs = 0;
  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");
  suite->add_option("--filter", filter, "Comma-separated criterion numbers or keywords");
  suite->add_option("--seed", suite_seed, "Seed (default SZX_SEED)");
  suite->add_option("--jobs", jobs, "1 for sequential, 0 to run criteria concurrently")->capture_default_str();
  suite->add_flag("--json", suite_json, "Machine-readable report");
  suite->add_flag("--timings", timings, "Include wall-clock timings (not deterministic)");
  suite->callback([&] { action = [&] { return cmd_suite(filter, suite_seed, suite_json, timings, jobs); }; });

  std::string bundle_out = "assets";
  auto* bundle = app.add_subcommand("bundle", "Write the bundled proof scripts, instances and diagrams");
  bundle->add_option("--out", bundle_out, "Output directory")->capture_default_str();
  bundle->callback([&] { action = [&] { return cmd_bundle(bundle_out); }; });

  bool rules_json = false;
  auto* rules = app.add_subcommand("list-rules", "List the rewrite rules");
  rules->add_flag("--json", rules_json, "Machine-readable output");
  rules->callback([&] { action = [&] { return cmd_list_rules(rules_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const std::uint64_t seed = default_seed();
    if (verify->count("--seed") == 0) va.seed = seed;
    if (suite->count("--seed") == 0) suite_seed = seed;
    status = action();
  } catch (const SzxError& e) {
    std::cerr << "szx: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "szx: " << e.what() << "\n";
    return kInputError;
  }
  return status;
}
