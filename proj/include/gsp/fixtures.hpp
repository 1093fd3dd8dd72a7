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

#ifndef GSP_FIXTURES_HPP_
#define GSP_FIXTURES_HPP_

#include <string>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp::fixtures {

/// Four vertices, a={1,2} b={2,3} c={3,4} d={4,1} e={2,4}: a 4-cycle with
/// the chord e.
Graph fig1();

/// Five vertices, edges 1-2 1-3 1-5 2-4 3-4 4-5. Maximal independent sets
/// {1,4} and {2,3,5}.
Graph mis_example();

/// 3-cycle with edges a={1,2} b={2,3} c={1,3}.
Graph triangle();

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Twenty small connected graphs (at most 8 edges and 8 vertices), starting
/// with fig1 and mis_example. Used by classification.
std::vector<NamedGraph> corpus();

}  // namespace gsp::fixtures

#endif  // GSP_FIXTURES_HPP_
