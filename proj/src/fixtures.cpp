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

#include "gsp/fixtures.hpp"

#include <utility>

namespace gsp::fixtures {

namespace {

// Vertices 1..n; edges lettered a, b, c, ... in the order given.
Graph lettered(int n, const std::vector<std::pair<VertexId, VertexId>>& ends) {
  std::vector<VertexId> ids;
  for (int v = 1; v <= n; ++v) ids.push_back(v);
  std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>> edges;
  char letter = 'a';
  for (const auto& e : ends) edges.push_back({std::string(1, letter++), e});
  return Graph::from_ids(ids, edges);
}

}  // namespace

Graph fig1() {
  return lettered(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 4}});
}

Graph mis_example() {
  return lettered(5, {{1, 2}, {1, 3}, {1, 5}, {2, 4}, {3, 4}, {4, 5}});
}

Graph triangle() { return lettered(3, {{1, 2}, {2, 3}, {1, 3}}); }

std::vector<NamedGraph> corpus() {
  return {
      {"fig1", fig1()},
      {"mis_example", mis_example()},
      {"triangle", triangle()},
      {"k4", lettered(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})},
      {"c4", lettered(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})},
      {"c5", lettered(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}})},
      {"c6", lettered(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}})},
      {"p4", lettered(4, {{1, 2}, {2, 3}, {3, 4}})},
      {"star3", lettered(4, {{1, 2}, {1, 3}, {1, 4}})},
      {"k2", lettered(2, {{1, 2}})},
      {"digon", lettered(2, {{1, 2}, {1, 2}})},
      {"looped_vertex", lettered(1, {{1, 1}})},
      {"paw", lettered(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})},
      {"bowtie",
       lettered(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}})},
      {"house", lettered(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {4, 5}})},
      {"k23", lettered(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})},
      {"wheel4", lettered(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}, {5, 2},
                              {5, 3}, {5, 4}})},
      {"theta", lettered(5, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 4}, {4, 5}})},
      {"c4_double_chord",
       lettered(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {1, 3}})},
      {"triangle_loop", lettered(3, {{1, 2}, {2, 3}, {1, 3}, {2, 2}})},
  };
}

}  // namespace gsp::fixtures
