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

#include "gsp/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "union_find.hpp"

namespace gsp {

namespace {

Endpoints normalized(std::size_t u, std::size_t v) {
  return u <= v ? Endpoints{u, v} : Endpoints{v, u};
}

void require_edges(const Graph& g, const EdgeIdSet& ids, const char* op) {
  for (const auto& id : ids) {
    if (!g.has_edge(id)) {
      throw std::domain_error(std::string(op) + ": unknown edge id '" + id +
                              "'");
    }
  }
}

std::set<std::size_t> vertex_indices(const Graph& g, const VertexIdSet& ids,
                                     const char* op) {
  std::set<std::size_t> out;
  for (VertexId id : ids) {
    auto v = g.vertex_of(id);
    if (!v) {
      throw std::domain_error(std::string(op) + ": unknown vertex id " +
                              std::to_string(id));
    }
    out.insert(*v);
  }
  return out;
}

// Degree of each vertex in y, a loop counting twice.
std::vector<std::size_t> degrees(const Graph& g, const EdgeIdSet& y) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const auto& id : y) {
    const Endpoints& e = g.endpoints(id);
    ++deg[e.first];
    ++deg[e.second];
  }
  return deg;
}

}  // namespace

Graph Graph::from_ids(
    const std::vector<VertexId>& ids,
    const std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>>&
        edges) {
  std::vector<VertexLabel> labels;
  labels.reserve(ids.size());
  for (VertexId id : ids) labels.push_back({id});
  std::vector<std::pair<EdgeId, std::pair<VertexLabel, VertexLabel>>> named;
  named.reserve(edges.size());
  for (const auto& [id, ends] : edges) {
    named.push_back({id, {{ends.first}, {ends.second}}});
  }
  return from_labels(std::move(labels), named);
}

Graph Graph::from_labels(
    std::vector<VertexLabel> labels,
    const std::vector<std::pair<EdgeId, std::pair<VertexLabel, VertexLabel>>>&
        edges) {
  std::set<VertexId> seen;
  for (auto& label : labels) {
    if (label.empty()) throw std::invalid_argument("empty vertex label");
    std::sort(label.begin(), label.end());
    if (std::adjacent_find(label.begin(), label.end()) != label.end()) {
      throw std::invalid_argument("vertex label repeats an id");
    }
    for (VertexId id : label) {
      if (!seen.insert(id).second) {
        throw std::invalid_argument("vertex id " + std::to_string(id) +
                                    " appears in two labels");
      }
    }
  }
  std::sort(labels.begin(), labels.end());

  Graph g(std::move(labels), {});
  auto index_of_label = [&g](VertexLabel label) -> std::size_t {
    std::sort(label.begin(), label.end());
    auto it = std::lower_bound(g.vertices_.begin(), g.vertices_.end(), label);
    if (it == g.vertices_.end() || *it != label) {
      throw std::invalid_argument("edge endpoint names no vertex");
    }
    return static_cast<std::size_t>(it - g.vertices_.begin());
  };
  for (const auto& [id, ends] : edges) {
    if (g.edges_.count(id) != 0) {
      throw std::invalid_argument("duplicate edge id '" + id + "'");
    }
    g.edges_.emplace(id, normalized(index_of_label(ends.first),
                                    index_of_label(ends.second)));
  }
  return g;
}

const Endpoints& Graph::endpoints(const EdgeId& id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    throw std::domain_error("unknown edge id '" + id + "'");
  }
  return it->second;
}

std::optional<std::size_t> Graph::vertex_of(VertexId id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (std::binary_search(vertices_[i].begin(), vertices_[i].end(), id)) {
      return i;
    }
  }
  return std::nullopt;
}

EdgeIdSet Graph::edge_ids() const {
  EdgeIdSet out;
  for (const auto& [id, _] : edges_) out.insert(id);
  return out;
}

Graph contract(const Graph& g, const EdgeIdSet& a) {
  require_edges(g, a, "contract");
  internal::UnionFind uf(g.vertex_count());
  for (const auto& id : a) {
    const Endpoints& e = g.endpoints(id);
    uf.unite(e.first, e.second);
  }

  std::map<std::size_t, VertexLabel> merged;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto& label = merged[uf.find(v)];
    label.insert(label.end(), g.vertices_[v].begin(), g.vertices_[v].end());
  }
  std::vector<VertexLabel> labels;
  for (auto& [_, label] : merged) {
    std::sort(label.begin(), label.end());
    labels.push_back(std::move(label));
  }
  std::sort(labels.begin(), labels.end());

  // Old vertex index -> new index, via the smallest id of the old label.
  std::vector<std::size_t> remap(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexId probe = g.vertices_[v].front();
    for (std::size_t w = 0; w < labels.size(); ++w) {
      if (std::binary_search(labels[w].begin(), labels[w].end(), probe)) {
        remap[v] = w;
        break;
      }
    }
  }

  std::map<EdgeId, Endpoints> edges;
  for (const auto& [id, e] : g.edges_) {
    if (a.count(id) != 0) continue;
    edges.emplace(id, normalized(remap[e.first], remap[e.second]));
  }
  return Graph(std::move(labels), std::move(edges));
}

Graph delete_edges(const Graph& g, const EdgeIdSet& b) {
  require_edges(g, b, "delete");
  std::map<EdgeId, Endpoints> edges;
  for (const auto& [id, e] : g.edges_) {
    if (b.count(id) == 0) edges.emplace(id, e);
  }
  return Graph(g.vertices_, std::move(edges));
}

Graph minor(const Graph& g, const EdgeIdSet& contracted,
            const EdgeIdSet& deleted) {
  require_edges(g, contracted, "minor");
  require_edges(g, deleted, "minor");
  for (const auto& id : contracted) {
    if (deleted.count(id) != 0) {
      throw std::domain_error("minor: edge '" + id +
                              "' both contracted and deleted");
    }
  }
  return delete_edges(contract(g, contracted), deleted);
}

Graph induced_subgraph(const Graph& g, const VertexIdSet& vs) {
  for (VertexId id : vs) {
    if (!g.vertex_of(id)) {
      throw std::domain_error("induced_subgraph: unknown vertex id " +
                              std::to_string(id));
    }
  }
  std::vector<VertexLabel> labels;
  std::vector<std::optional<std::size_t>> remap(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexLabel& label = g.vertices_[v];
    const auto inside = static_cast<std::size_t>(std::count_if(
        label.begin(), label.end(),
        [&vs](VertexId id) { return vs.count(id) != 0; }));
    if (inside == 0) continue;
    if (inside != label.size()) {
      throw std::domain_error(
          "induced_subgraph: vertex set splits label " + label_name(label));
    }
    remap[v] = labels.size();
    labels.push_back(label);
  }
  std::map<EdgeId, Endpoints> edges;
  for (const auto& [id, e] : g.edges_) {
    if (remap[e.first] && remap[e.second]) {
      edges.emplace(id, normalized(*remap[e.first], *remap[e.second]));
    }
  }
  return Graph(std::move(labels), std::move(edges));
}

bool is_hamiltonian_cycle(const Graph& g, const EdgeIdSet& y) {
  require_edges(g, y, "is_hamiltonian_cycle");
  if (y.empty()) return g.vertex_count() == 1;
  const auto deg = degrees(g, y);
  if (std::any_of(deg.begin(), deg.end(),
                  [](std::size_t d) { return d != 2; })) {
    return false;
  }
  internal::UnionFind uf(g.vertex_count());
  for (const auto& id : y) {
    const Endpoints& e = g.endpoints(id);
    uf.unite(e.first, e.second);
  }
  return uf.classes() == 1;
}

bool is_forest(const Graph& g, const EdgeIdSet& y) {
  require_edges(g, y, "is_forest");
  internal::UnionFind uf(g.vertex_count());
  for (const auto& id : y) {
    const Endpoints& e = g.endpoints(id);
    if (!uf.unite(e.first, e.second)) return false;
  }
  return true;
}

bool is_spanning_tree(const Graph& g, const EdgeIdSet& y) {
  return g.vertex_count() > 0 && is_forest(g, y) &&
         y.size() + 1 == g.vertex_count();
}

std::size_t component_count(const Graph& g) {
  internal::UnionFind uf(g.vertex_count());
  for (const auto& [_, e] : g.edges()) uf.unite(e.first, e.second);
  return uf.classes();
}

bool is_spanning_forest(const Graph& g, const EdgeIdSet& y) {
  return is_forest(g, y) &&
         y.size() + component_count(g) == g.vertex_count();
}

bool is_independent_set(const Graph& g, const VertexIdSet& y) {
  const auto inside = vertex_indices(g, y, "is_independent_set");
  for (const auto& [_, e] : g.edges()) {
    if (inside.count(e.first) != 0 && inside.count(e.second) != 0) {
      return false;
    }
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexIdSet& y) {
  if (!is_independent_set(g, y)) return false;
  const auto inside = vertex_indices(g, y, "is_maximal_independent");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (inside.count(v) != 0) continue;
    bool blocked = false;
    for (const auto& [_, e] : g.edges()) {
      const bool touches_v = e.first == v || e.second == v;
      if (!touches_v) continue;
      const std::size_t other = e.first == v ? e.second : e.first;
      if (other == v || inside.count(other) != 0) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return false;
  }
  return true;
}

// GroundSet -----------------------------------------------------------------

std::string label_name(const VertexLabel& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i != 0) out += '+';
    out += std::to_string(label[i]);
  }
  return out;
}

GroundSet::GroundSet(GroundKind kind, std::vector<std::string> names,
                     std::vector<VertexLabel> labels)
    : kind_(kind), names_(std::move(names)), labels_(std::move(labels)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) {
    throw std::invalid_argument("ground set elements are not distinct");
  }
  if (names_.size() > ElementSet::kMaxElements) {
    throw std::invalid_argument("ground set wider than ElementSet");
  }
  if (kind_ == GroundKind::kVertices && labels_.size() != names_.size()) {
    throw std::invalid_argument("vertex ground set needs one label per name");
  }
}

GroundSet GroundSet::edges_of(const Graph& g) {
  std::vector<std::string> names;
  for (const auto& [id, _] : g.edges()) names.push_back(id);
  if (names.size() > ElementSet::kMaxElements) {
    throw std::domain_error("graph has more edges than ElementSet can hold");
  }
  return GroundSet(GroundKind::kEdges, std::move(names));
}

GroundSet GroundSet::vertices_of(const Graph& g) {
  std::vector<std::string> names;
  for (const auto& label : g.vertices()) names.push_back(label_name(label));
  if (names.size() > ElementSet::kMaxElements) {
    throw std::domain_error("graph has more vertices than ElementSet can hold");
  }
  return GroundSet(GroundKind::kVertices, std::move(names), g.vertices());
}

std::optional<std::size_t> GroundSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ElementSet GroundSet::subset(const std::vector<std::string>& names) const {
  ElementSet s;
  for (const auto& name : names) {
    auto i = index_of(name);
    if (!i) throw std::domain_error("unknown ground element '" + name + "'");
    s = s.with(*i);
  }
  return s;
}

std::vector<std::string> GroundSet::names_of(ElementSet s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(names_.at(i)); });
  return out;
}

std::string GroundSet::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += names_.at(i);
    first = false;
  });
  return out + "}";
}

EdgeIdSet GroundSet::edge_ids(ElementSet s) const {
  EdgeIdSet out;
  s.for_each([&](std::size_t i) { out.insert(names_.at(i)); });
  return out;
}

VertexIdSet GroundSet::vertex_ids(ElementSet s) const {
  VertexIdSet out;
  s.for_each([&](std::size_t i) {
    const auto& label = labels_.at(i);
    out.insert(label.begin(), label.end());
  });
  return out;
}

}  // namespace gsp
