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

#ifndef GSP_GRAPH_HPP_
#define GSP_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsp/element_set.hpp"

namespace gsp {

using VertexId = int;
// Sorted, non-empty set of original vertex ids merged into one vertex.
using VertexLabel = std::vector<VertexId>;
using EdgeId = std::string;
using EdgeIdSet = std::set<EdgeId>;
using VertexIdSet = std::set<VertexId>;

/// Endpoints as indices into Graph::vertices(), normalised so first <= second.
struct Endpoints {
  std::size_t first = 0;
  std::size_t second = 0;

  bool is_loop() const { return first == second; }
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Immutable labelled multigraph. Loops and parallel edges are allowed.
///
/// Vertices are kept sorted by label, and every label is the set of original
/// ids merged into that vertex by contraction. Two graphs descending from the
/// same ancestor are therefore equal exactly when they are the same minor;
/// operator== needs no isomorphism test.
class Graph {
 public:
  Graph() = default;

  /// Each id becomes a singleton vertex; edges name their endpoints by id.
  static Graph from_ids(
      const std::vector<VertexId>& ids,
      const std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>>&
          edges);

  /// General form: explicit labels, edges naming endpoint labels.
  /// Throws std::invalid_argument on overlapping or empty labels and on
  /// endpoints that name no present label.
  static Graph from_labels(
      std::vector<VertexLabel> labels,
      const std::vector<std::pair<EdgeId, std::pair<VertexLabel, VertexLabel>>>&
          edges);

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::map<EdgeId, Endpoints>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(const EdgeId& id) const { return edges_.count(id) != 0; }
  /// Throws std::domain_error for an unknown id.
  const Endpoints& endpoints(const EdgeId& id) const;
  const VertexLabel& label(std::size_t index) const {
    return vertices_.at(index);
  }
  /// Index of the vertex whose label contains the original id.
  std::optional<std::size_t> vertex_of(VertexId id) const;
  EdgeIdSet edge_ids() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<VertexLabel> vertices, std::map<EdgeId, Endpoints> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  friend Graph contract(const Graph&, const EdgeIdSet&);
  friend Graph delete_edges(const Graph&, const EdgeIdSet&);
  friend Graph induced_subgraph(const Graph&, const VertexIdSet&);

  std::vector<VertexLabel> vertices_;
  std::map<EdgeId, Endpoints> edges_;
};

/// G/A. Non-loop edges of A merge their endpoint labels; loops of A are
/// removed. Edges outside A keep their ids, becoming loops or parallels where
/// their endpoints merged.
Graph contract(const Graph& g, const EdgeIdSet& a);

/// G\B. Vertices are untouched.
Graph delete_edges(const Graph& g, const EdgeIdSet& b);

/// G/A\B for disjoint A and B.
Graph minor(const Graph& g, const EdgeIdSet& contracted,
            const EdgeIdSet& deleted);

/// Keeps the vertices whose labels lie inside vs and the edges between them.
/// A label only partly covered by vs is a domain error.
Graph induced_subgraph(const Graph& g, const VertexIdSet& vs);

// Structural predicates. Unknown ids are domain errors.

/// Every vertex has degree exactly 2 in y and y is connected. A one-vertex
/// graph is also Hamiltonian-cycled by the empty set.
bool is_hamiltonian_cycle(const Graph& g, const EdgeIdSet& y);
/// Acyclic; a loop or a parallel pair is a cycle.
bool is_forest(const Graph& g, const EdgeIdSet& y);
/// Acyclic, connected and touching every vertex.
bool is_spanning_tree(const Graph& g, const EdgeIdSet& y);
/// Acyclic with one tree per connected component of g.
bool is_spanning_forest(const Graph& g, const EdgeIdSet& y);
std::size_t component_count(const Graph& g);

/// No two vertices of y adjacent; a looped vertex is adjacent to itself.
bool is_independent_set(const Graph& g, const VertexIdSet& y);
/// Independent and no further vertex of g can be added.
bool is_maximal_independent(const Graph& g, const VertexIdSet& y);

// Ground sets ---------------------------------------------------------------

enum class GroundKind { kEdges, kVertices };

/// The ordered ground set X of a problem instance: the edge ids in map order,
/// or the vertex labels in sorted order.
class GroundSet {
 public:
  GroundSet() = default;
  GroundSet(GroundKind kind, std::vector<std::string> names,
            std::vector<VertexLabel> labels = {});

  static GroundSet edges_of(const Graph& g);
  static GroundSet vertices_of(const Graph& g);

  GroundKind kind() const { return kind_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Vertex labels for the vertices kind, empty otherwise.
  const std::vector<VertexLabel>& labels() const { return labels_; }
  ElementSet all() const { return ElementSet::full(size()); }

  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Throws std::domain_error naming the first unknown element.
  ElementSet subset(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(ElementSet s) const;
  /// "{a,b,c}" in ground order.
  std::string format(ElementSet s) const;

  EdgeIdSet edge_ids(ElementSet s) const;
  VertexIdSet vertex_ids(ElementSet s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  GroundKind kind_ = GroundKind::kEdges;
  std::vector<std::string> names_;
  std::vector<VertexLabel> labels_;
};

/// "3" for a singleton label, "3+4" for a merged one.
std::string label_name(const VertexLabel& label);

}  // namespace gsp

#endif  // GSP_GRAPH_HPP_
