// Copyright 2026 The gsp Authors. All Rights Reserved.
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
// =============================================================================

#include "gsp/dot.hpp"

#include <sstream>

namespace gsp {

namespace {

bool has_extension(const FeasibleFamily& fam, ElementSet s) {
  const ElementSet rest = fam.ground().all() - s;
  for (std::size_t x : rest.elements()) {
    if (fam.contains(s.with(x))) return true;
  }
  return false;
}

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::vector<ElementSet> stuck_members(const FeasibleFamily& fam) {
  std::vector<ElementSet> out;
  for (ElementSet s : fam.members()) {
    if (!fam.is_basis(s) && !has_extension(fam, s)) out.push_back(s);
  }
  return out;
}

std::string export_dot(const FeasibleFamily& fam) {
  const auto& members = fam.members();
  std::ostringstream out;
  out << "digraph family {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ElementSet s = members[i];
    out << "  n" << i << " [label=" << quoted(fam.ground().format(s));
    if (fam.is_basis(s)) out << ", peripheries=2";
    if (!fam.is_basis(s) && !has_extension(fam, s)) {
      out << ", color=red, fontcolor=red";
    }
    out << "];\n";
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (members[j].size() == members[i].size() + 1 &&
          members[i].subset_of(members[j])) {
        out << "  n" << i << " -> n" << j << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gsp
