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

#ifndef GSP_PROBLEMS_HPP_
#define GSP_PROBLEMS_HPP_

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "gsp/element_set.hpp"
#include "gsp/errors.hpp"
#include "gsp/graph.hpp"

namespace gsp {

enum class Predicate {
  kSpanningTree,          // "stp", ground = edges
  kHamiltonianCycle,      // "hc",  ground = edges
  kMaximalIndependentSet  // "mis", ground = vertices
};

/// A graphical search problem: a predicate plus the kind of ground set it is
/// posed over. The ground kind is a function of the predicate.
class SearchProblem {
 public:
  constexpr explicit SearchProblem(Predicate predicate)
      : predicate_(predicate) {}

  static constexpr SearchProblem spanning_tree() {
    return SearchProblem(Predicate::kSpanningTree);
  }
  static constexpr SearchProblem hamiltonian_cycle() {
    return SearchProblem(Predicate::kHamiltonianCycle);
  }
  static constexpr SearchProblem maximal_independent_set() {
    return SearchProblem(Predicate::kMaximalIndependentSet);
  }
  /// "stp" | "hc" | "mis"; anything else is a domain error.
  static SearchProblem from_token(std::string_view token);

  constexpr Predicate predicate() const { return predicate_; }
  constexpr GroundKind ground_kind() const {
    return predicate_ == Predicate::kMaximalIndependentSet
               ? GroundKind::kVertices
               : GroundKind::kEdges;
  }
  std::string_view token() const;

  friend constexpr bool operator==(SearchProblem, SearchProblem) = default;

 private:
  Predicate predicate_;
};

GroundSet ground_set(SearchProblem p, const Graph& g);

/// The graph realising a sub-instance: contract(g, X \ s) for edge problems,
/// the subgraph induced by s for vertex problems.
Graph canonical_instance(SearchProblem p, const Graph& g, ElementSet s);

struct SubInstance {
  ElementSet carrier;
  Graph realized;
};
SubInstance make_sub_instance(SearchProblem p, const Graph& g, ElementSet s);

/// A problem bound to one input graph, with the ground set precomputed and a
/// compact bitmask encoding used by every exhaustive search in the library.
class ProblemInstance {
 public:
  /// Throws ResourceError when the ground set exceeds caps.feasibility.
  ProblemInstance(SearchProblem p, Graph g, Caps caps = {});

  SearchProblem problem() const { return problem_; }
  const Graph& graph() const { return graph_; }
  const GroundSet& ground() const { return ground_; }
  const Caps& caps() const { return caps_; }
  std::size_t size() const { return ground_.size(); }

  /// y is a solution of the sub-instance carried by s (y must lie in s).
  bool solves(ElementSet y, ElementSet s) const;
  bool is_solution(ElementSet y) const { return solves(y, ground_.all()); }
  /// Fast feasibility: forest / independent set / Hamiltonian cycle of some
  /// contraction minor.
  bool is_feasible(ElementSet y) const;
  /// All solutions of the full instance, in canonical order.
  std::vector<ElementSet> solutions() const;

  /// Every B inside X \ y with y a Hamiltonian cycle of G/B, canonical order.
  std::vector<ElementSet> hamiltonian_certificates(ElementSet y) const;
  /// The inclusion-minimal members of hamiltonian_certificates(y).
  std::vector<ElementSet> minimal_hamiltonian_certificates(ElementSet y) const;

  /// y plus every vertex adjacent to y, plus every looped vertex (vertex
  /// problems).
  ElementSet neighbourhood_closure(ElementSet y) const;
  /// Edges whose addition keeps the cycle-matroid rank of y (edge problems).
  ElementSet span(ElementSet y) const;
  std::size_t cycle_rank(ElementSet y) const;

  Graph realize(ElementSet s) const {
    return canonical_instance(problem_, graph_, s);
  }

 private:
  bool hamiltonian_in_contraction(ElementSet y, ElementSet contracted) const;
  bool spanning_forest_in_contraction(ElementSet y,
                                      ElementSet contracted) const;
  bool maximal_independent_in(ElementSet y, ElementSet s) const;

  SearchProblem problem_;
  Graph graph_;
  GroundSet ground_;
  Caps caps_;
  std::size_t vertex_count_ = 0;
  std::size_t components_ = 0;
  // Edge problems: endpoints per ground element.
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  // Vertex problems: neighbours per ground element; a loop sets the own bit.
  std::vector<ElementSet> adjacency_;
};

// Free-function forms bound to a single call.

std::vector<ElementSet> solutions(SearchProblem p, const Graph& g,
                                  const Caps& caps = {});
bool is_feasible_fast(SearchProblem p, const Graph& g, ElementSet y,
                      const Caps& caps = {});

}  // namespace gsp

#endif  // GSP_PROBLEMS_HPP_
