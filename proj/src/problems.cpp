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

#include "gsp/problems.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "union_find.hpp"

namespace gsp {

SearchProblem SearchProblem::from_token(std::string_view token) {
  if (token == "stp") return spanning_tree();
  if (token == "hc") return hamiltonian_cycle();
  if (token == "mis") return maximal_independent_set();
  throw std::domain_error("unknown problem '" + std::string(token) +
                          "' (expected stp, hc or mis)");
}

std::string_view SearchProblem::token() const {
  switch (predicate_) {
    case Predicate::kSpanningTree:
      return "stp";
    case Predicate::kHamiltonianCycle:
      return "hc";
    case Predicate::kMaximalIndependentSet:
      return "mis";
  }
  return "?";
}

GroundSet ground_set(SearchProblem p, const Graph& g) {
  return p.ground_kind() == GroundKind::kEdges ? GroundSet::edges_of(g)
                                               : GroundSet::vertices_of(g);
}

Graph canonical_instance(SearchProblem p, const Graph& g, ElementSet s) {
  const GroundSet ground = ground_set(p, g);
  if (!s.subset_of(ground.all())) {
    throw std::domain_error("canonical_instance: subset outside ground set");
  }
  if (p.ground_kind() == GroundKind::kEdges) {
    return contract(g, ground.edge_ids(ground.all() - s));
  }
  return induced_subgraph(g, ground.vertex_ids(s));
}

SubInstance make_sub_instance(SearchProblem p, const Graph& g, ElementSet s) {
  return SubInstance{s, canonical_instance(p, g, s)};
}

namespace {

GroundSet capped_ground_set(SearchProblem p, const Graph& g,
                            const Caps& caps) {
  const std::size_t n = p.ground_kind() == GroundKind::kEdges
                            ? g.edge_count()
                            : g.vertex_count();
  require_cap("feasibility", std::min(caps.feasibility, Caps::kCeiling), n);
  return ground_set(p, g);
}

}  // namespace

ProblemInstance::ProblemInstance(SearchProblem p, Graph g, Caps caps)
    : problem_(p),
      graph_(std::move(g)),
      ground_(capped_ground_set(p, graph_, caps)),
      caps_(caps) {
  vertex_count_ = graph_.vertex_count();
  components_ = component_count(graph_);
  if (p.ground_kind() == GroundKind::kEdges) {
    for (const auto& [_, e] : graph_.edges()) {
      ends_.emplace_back(e.first, e.second);
    }
  } else {
    adjacency_.assign(vertex_count_, ElementSet{});
    for (const auto& [_, e] : graph_.edges()) {
      adjacency_[e.first] = adjacency_[e.first].with(e.second);
      adjacency_[e.second] = adjacency_[e.second].with(e.first);
    }
  }
}

bool ProblemInstance::hamiltonian_in_contraction(ElementSet y,
                                                 ElementSet contracted) const {
  internal::UnionFind uf(vertex_count_);
  contracted.for_each(
      [&](std::size_t i) { uf.unite(ends_[i].first, ends_[i].second); });
  if (y.empty()) return uf.classes() == 1;

  std::vector<std::size_t> degree(vertex_count_, 0);
  y.for_each([&](std::size_t i) {
    ++degree[uf.find(ends_[i].first)];
    ++degree[uf.find(ends_[i].second)];
  });
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (uf.find(v) == v && degree[v] != 2) return false;
  }
  y.for_each(
      [&](std::size_t i) { uf.unite(ends_[i].first, ends_[i].second); });
  return uf.classes() == 1;
}

bool ProblemInstance::spanning_forest_in_contraction(
    ElementSet y, ElementSet contracted) const {
  internal::UnionFind uf(vertex_count_);
  contracted.for_each(
      [&](std::size_t i) { uf.unite(ends_[i].first, ends_[i].second); });
  bool acyclic = true;
  y.for_each([&](std::size_t i) {
    if (!uf.unite(ends_[i].first, ends_[i].second)) acyclic = false;
  });
  // Contraction preserves connectivity, so the minor has components_ parts.
  return acyclic && uf.classes() == components_;
}

bool ProblemInstance::maximal_independent_in(ElementSet y,
                                             ElementSet s) const {
  bool ok = true;
  y.for_each([&](std::size_t v) {
    if (adjacency_[v].intersects(y)) ok = false;
  });
  if (!ok) return false;
  (s - y).for_each([&](std::size_t v) {
    const bool addable = !adjacency_[v].contains(v) &&
                         !adjacency_[v].intersects(y);
    if (addable) ok = false;
  });
  return ok;
}

bool ProblemInstance::solves(ElementSet y, ElementSet s) const {
  if (!y.subset_of(s) || !s.subset_of(ground_.all())) return false;
  switch (problem_.predicate()) {
    case Predicate::kSpanningTree:
      return spanning_forest_in_contraction(y, ground_.all() - s);
    case Predicate::kHamiltonianCycle:
      return hamiltonian_in_contraction(y, ground_.all() - s);
    case Predicate::kMaximalIndependentSet:
      return maximal_independent_in(y, s);
  }
  return false;
}

bool ProblemInstance::is_feasible(ElementSet y) const {
  if (!y.subset_of(ground_.all())) return false;
  switch (problem_.predicate()) {
    case Predicate::kSpanningTree: {
      internal::UnionFind uf(vertex_count_);
      bool acyclic = true;
      y.for_each([&](std::size_t i) {
        if (!uf.unite(ends_[i].first, ends_[i].second)) acyclic = false;
      });
      return acyclic;
    }
    case Predicate::kMaximalIndependentSet: {
      bool independent = true;
      y.for_each([&](std::size_t v) {
        if (adjacency_[v].intersects(y)) independent = false;
      });
      return independent;
    }
    case Predicate::kHamiltonianCycle: {
      bool found = false;
      for_each_subset(ground_.all() - y, [&](ElementSet b) {
        if (!found && hamiltonian_in_contraction(y, b)) found = true;
      });
      return found;
    }
  }
  return false;
}

std::vector<ElementSet> ProblemInstance::solutions() const {
  std::vector<ElementSet> out;
  for_each_subset(ground_.all(), [&](ElementSet y) {
    if (is_solution(y)) out.push_back(y);
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<ElementSet> ProblemInstance::hamiltonian_certificates(
    ElementSet y) const {
  std::vector<ElementSet> out;
  if (problem_.ground_kind() != GroundKind::kEdges) return out;
  for_each_subset(ground_.all() - y, [&](ElementSet b) {
    if (hamiltonian_in_contraction(y, b)) out.push_back(b);
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<ElementSet> ProblemInstance::minimal_hamiltonian_certificates(
    ElementSet y) const {
  const auto all = hamiltonian_certificates(y);
  std::vector<ElementSet> out;
  // Canonical order lists smaller sets first, so a kept set is never a
  // superset of a later one.
  for (ElementSet b : all) {
    const bool dominated = std::any_of(
        out.begin(), out.end(), [b](ElementSet m) { return m.subset_of(b); });
    if (!dominated) out.push_back(b);
  }
  return out;
}

ElementSet ProblemInstance::neighbourhood_closure(ElementSet y) const {
  ElementSet out = y;
  y.for_each([&](std::size_t v) { out = out | adjacency_[v]; });
  // Looped vertices are adjacent to themselves and never join y.
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    if (adjacency_[v].contains(v)) out = out.with(v);
  }
  return out;
}

std::size_t ProblemInstance::cycle_rank(ElementSet y) const {
  internal::UnionFind uf(vertex_count_);
  y.for_each(
      [&](std::size_t i) { uf.unite(ends_[i].first, ends_[i].second); });
  return vertex_count_ - uf.classes();
}

ElementSet ProblemInstance::span(ElementSet y) const {
  internal::UnionFind uf(vertex_count_);
  y.for_each(
      [&](std::size_t i) { uf.unite(ends_[i].first, ends_[i].second); });
  ElementSet out;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (uf.find(ends_[i].first) == uf.find(ends_[i].second)) {
      out = out.with(i);
    }
  }
  return out;
}

std::vector<ElementSet> solutions(SearchProblem p, const Graph& g,
                                  const Caps& caps) {
  return ProblemInstance(p, g, caps).solutions();
}

bool is_feasible_fast(SearchProblem p, const Graph& g, ElementSet y,
                      const Caps& caps) {
  return ProblemInstance(p, g, caps).is_feasible(y);
}

}  // namespace gsp
