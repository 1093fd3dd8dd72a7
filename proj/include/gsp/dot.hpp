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

#ifndef GSP_DOT_HPP_
#define GSP_DOT_HPP_

#include <string>
#include <vector>

#include "gsp/family.hpp"

namespace gsp {

/// Members with no one-element extension in the family that are not bases.
std::vector<ElementSet> stuck_members(const FeasibleFamily& fam);

/// Graphviz digraph of the cover relation: one node per member, an arc S -> S+x
/// for each member S+x. Bases get a double border, stuck members are red.
std::string export_dot(const FeasibleFamily& fam);

}  // namespace gsp

#endif  // GSP_DOT_HPP_
