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

#include "szx/export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "szx/io.hpp"

namespace szx {

namespace {

std::string phase_text(double a) {
  const Json j = phase_to_json(a);
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "1") return "pi";
    if (s == "-1") return "-pi";
    const auto slash = s.find('/');
    if (slash == std::string::npos) return s + "pi";
    const std::string p = s.substr(0, slash);
    return (p == "1" ? "" : p == "-1" ? "-" : p) + "pi/" + s.substr(slash + 1);
  }
  std::ostringstream out;
  out << a;
  return out.str();
}

std::string vertex(const Endpoint& e) {
  if (e.is_boundary()) return (e.out ? "out" : "in") + std::to_string(e.index);
  return "n" + std::to_string(e.node);
}

std::string colour(Kind k) {
  switch (k) {
    case Kind::Green: return "palegreen";
    case Kind::Red: return "salmon";
    case Kind::HBox: return "gold";
    case Kind::FunctionArrow:
    case Kind::RedArrow:
    case Kind::YellowArrow: return "lightblue";
    default: return "white";
  }
}

std::string escape_dot(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

std::string escape_tex(const std::string& s) {
  std::string r;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      r += "$\\to$";
      ++i;
      continue;
    }
    switch (c) {
      case '_': r += "\\_"; break;
      case '&': r += "\\&"; break;
      case '#': r += "\\#"; break;
      case '%': r += "\\%"; break;
      default: r += c;
    }
  }
  return r;
}

// Longest-path column per node; inputs at column 0. Edges are read from a
// node output (or input slot) to a node input (or output slot); cycles are
// cut after node_count rounds.
std::map<NodeId, int> columns(const Diagram& d) {
  std::map<NodeId, int> col;
  for (const auto& [id, g] : d.nodes()) col[id] = 1;
  for (std::size_t round = 0; round <= d.node_count(); ++round) {
    bool changed = false;
    for (const auto& [a, b] : d.edges()) {
      for (const auto& [src, dst] : {std::pair{a, b}, std::pair{b, a}}) {
        if (dst.is_boundary() || dst.out) continue;
        if (src.is_boundary() ? src.out : !src.out) continue;
        const int from = src.is_boundary() ? 0 : col[src.node];
        if (col[dst.node] < from + 1) {
          col[dst.node] = from + 1;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return col;
}

}  // namespace

std::string node_label(const Generator& g) {
  std::string s = g.describe();
  if (g.kind == Kind::Green || g.kind == Kind::Red) {
    if (std::any_of(g.phases.begin(), g.phases.end(), [](double a) { return a != 0; })) {
      s += " (";
      for (std::size_t i = 0; i < g.phases.size(); ++i) s += (i ? "," : "") + phase_text(g.phases[i]);
      s += ")";
    }
  } else if (g.kind == Kind::HBox) {
    if (std::any_of(g.labels.begin(), g.labels.end(), [](cd z) { return z != cd(-1, 0); })) {
      std::ostringstream out;
      out << " (";
      for (std::size_t i = 0; i < g.labels.size(); ++i) {
        if (i) out << ",";
        if (g.labels[i].imag() == 0) out << g.labels[i].real();
        else out << g.labels[i].real() << (g.labels[i].imag() < 0 ? "" : "+") << g.labels[i].imag() << "i";
      }
      out << ")";
      s += out.str();
    }
  }
  return s;
}

std::string to_dot(const Diagram& d, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << escape_dot(name) << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [fontname=\"Helvetica\", fontsize=10];\n";
  for (std::size_t i = 0; i < d.inputs().length(); ++i)
    out << "  in" << i << " [shape=plaintext, label=\"in " << i << "\"];\n";
  for (std::size_t i = 0; i < d.outputs().length(); ++i)
    out << "  out" << i << " [shape=plaintext, label=\"out " << i << "\"];\n";
  for (const auto& [id, g] : d.nodes()) {
    const bool round = g.is_arachnid() && g.kind != Kind::HBox;
    out << "  n" << id << " [shape=" << (round ? "ellipse" : "box") << ", style=filled, fillcolor=" << colour(g.kind)
        << ", label=\"" << id << ": " << escape_dot(node_label(g)) << "\"];\n";
  }
  for (const auto& [a, b] : d.edges()) {
    out << "  " << vertex(a) << " -- " << vertex(b) << " [";
    out << "taillabel=\"" << (a.is_boundary() ? "" : (a.out ? "o" : "i") + std::to_string(a.index))
        << "\", headlabel=\"" << (b.is_boundary() ? "" : (b.out ? "o" : "i") + std::to_string(b.index)) << "\"";
    const int w = d.width(a);
    if (w != 1) out << ", label=\"[" << w << "]\", penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_tikz(const Diagram& d) {
  const std::map<NodeId, int> col = columns(d);
  int last = 1;
  for (const auto& [id, c] : col) last = std::max(last, c + 1);
  std::map<int, int> filled;
  std::map<NodeId, int> row;
  for (const auto& [id, c] : col) row[id] = filled[c]++;

  std::ostringstream out;
  out << "\\begin{tikzpicture}[x=1.6cm, y=-1cm, every node/.style={font=\\small}]\n";
  for (std::size_t i = 0; i < d.inputs().length(); ++i)
    out << "  \\node (in" << i << ") at (0," << i << ") {};\n";
  for (const auto& [id, g] : d.nodes()) {
    const std::string shape = g.is_arachnid() && g.kind != Kind::HBox ? "circle" : "rectangle";
    out << "  \\node[draw, " << shape << ", fill=" << (g.kind == Kind::Green ? "green!30" : g.kind == Kind::Red ? "red!30" : g.kind == Kind::HBox ? "yellow!40" : "white")
        << "] (n" << id << ") at (" << col.at(id) << "," << row.at(id) << ") {" << escape_tex(node_label(g)) << "};\n";
  }
  for (std::size_t i = 0; i < d.outputs().length(); ++i)
    out << "  \\node (out" << i << ") at (" << last << "," << i << ") {};\n";
  for (const auto& [a, b] : d.edges()) {
    const int w = d.width(a);
    out << "  \\draw" << (w != 1 ? "[very thick]" : "") << " (" << vertex(a) << ") -- (" << vertex(b) << ")";
    if (w != 1) out << " node[midway, above] {$[" << w << "]$}";
    out << ";\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace szx
