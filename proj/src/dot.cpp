// Copyright 2026 The Authors.
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

#include "cgeom/dot.hpp"

#include <algorithm>
#include <sstream>

namespace cgeom {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

bool contains(const auto& range, const auto& value) {
  return std::find(range.begin(), range.end(), value) != range.end();
}

void header(std::ostringstream& out, const std::string& title) {
  out << "digraph " << quoted(title.empty() ? "lattice" : title) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  out << "  edge [arrowhead=none];\n";
}

}  // namespace

std::string emit_dot(const FiniteLattice& lattice, const DotAnnotations& annotations) {
  std::ostringstream out;
  header(out, annotations.title);
  for (ElementId a = 0; a < lattice.size(); ++a) {
    std::vector<std::string> attrs{"label=" + quoted(lattice.name(a))};
    if (annotations.join_irreducibles && lattice.is_join_irreducible(a)) attrs.push_back("shape=doublecircle");
    if (contains(annotations.extreme, a)) attrs.push_back("style=filled, fillcolor=lightblue");
    if (contains(annotations.witness, a)) attrs.push_back("color=red, penwidth=2");
    out << "  n" << a << " [";
    for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
    out << "];\n";
  }
  for (const auto& [lo, hi] : lattice.cover_pairs()) {
    const bool marked = contains(annotations.witness, lo) && contains(annotations.witness, hi);
    out << "  n" << lo << " -> n" << hi << (marked ? " [color=red]" : "") << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_dot(const LazyLattice& lattice, const Window& window, const std::vector<LazyElement>& witness) {
  std::ostringstream out;
  header(out, lattice.name());
  for (std::size_t i = 0; i < window.nodes.size(); ++i) {
    const WindowNode& n = window.nodes[i];
    std::vector<std::string> attrs{"label=" + quoted(lattice.label(n.element))};
    if (window.is_join_irreducible(i)) attrs.push_back("shape=doublecircle");
    if (window.is_frontier(i) || n.oracle.truncated) attrs.push_back("style=dashed, xlabel=\"...\"");
    if (contains(witness, n.element)) attrs.push_back("color=red, penwidth=2");
    out << "  n" << i << " [";
    for (std::size_t k = 0; k < attrs.size(); ++k) out << (k ? ", " : "") << attrs[k];
    out << "];\n";
  }
  for (const auto& [lo, hi] : window.cover_edges()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cgeom
