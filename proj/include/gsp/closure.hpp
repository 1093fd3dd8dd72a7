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

#ifndef GSP_CLOSURE_HPP_
#define GSP_CLOSURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gsp/element_set.hpp"
#include "gsp/problems.hpp"

namespace gsp {

/// Two closed sets whose extensions beyond the base overlap, so the closed
/// sets do not decompose as base plus disjoint classes.
struct PartitionViolation {
  ElementSet first;
  ElementSet second;
};

/// Closed sets of a feasible set y: every maximal S containing y such that y
/// is a solution of the sub-instance S.
struct ClosureReport {
  ElementSet base;
  std::vector<ElementSet> closed_sets;  // canonical order
  bool unique = false;
  // Classes S \ base, one per closed set, or the first overlapping pair.
  std::variant<std::vector<ElementSet>, PartitionViolation> partition;

  bool partition_holds() const {
    return std::holds_alternative<std::vector<ElementSet>>(partition);
  }
  /// Union of the closed sets.
  ElementSet hull() const;
};

/// Exhaustive over supersets of y. Throws std::domain_error if y is
/// infeasible.
ClosureReport closure_generic(const ProblemInstance& instance, ElementSet y);
ClosureReport closure_generic(SearchProblem p, const Graph& g, ElementSet y,
                              const Caps& caps = {});

/// Closure by the per-problem rule. For the Hamiltonian cycle problem the rule
/// depends on a minimal contraction certificate; one set is returned per
/// certificate and `ambiguous` is raised when there is more than one.
struct SpecificClosure {
  std::vector<ElementSet> sets;
  bool ambiguous = false;
};

/// MIS: y plus its neighbours. STP: the cycle-matroid span of y. HC: y plus
/// the edges of H = G/B that are loops in H or close a cycle with a path of y
/// in H, for each minimal certificate B. Throws std::domain_error if y is
/// infeasible.
SpecificClosure closure_specific(const ProblemInstance& instance,
                                 ElementSet y);
SpecificClosure closure_specific(SearchProblem p, const Graph& g, ElementSet y,
                                 const Caps& caps = {});

/// One step of the closure-growth procedure: T(i) = T(i-1) + added, and the
/// closure reached by the solutions of the realised instance T(i) that extend
/// the base.
struct GrowthStep {
  std::size_t added = 0;
  ElementSet instance;
  ElementSet closure;
};

struct GrowthTrace {
  ElementSet start;  // T(0), the first closed set of the base
  std::vector<GrowthStep> steps;
  std::optional<std::size_t> terminal;  // target that triggered the stop

  bool exhausted() const { return !terminal.has_value(); }
};

/// Grows T(i) one ground element at a time (ground order) from a closed set
/// of y, stopping at the first step whose closure contains a target. Targets
/// already in the closure of y are a domain error; running out of elements is
/// reported as exhaustion.
GrowthTrace grow_closure_trace(const ProblemInstance& instance, ElementSet y,
                               std::span<const std::size_t> targets);

/// A pair breaking x1 in cl(y + x2) <=> x2 in cl(y + x1), with cl taken as the
/// hull of the generic closed sets.
struct SymmetryViolation {
  ElementSet base;
  std::size_t x1 = 0;
  std::size_t x2 = 0;
  bool x1_in_cl_x2 = false;
  bool x2_in_cl_x1 = false;
};

std::optional<SymmetryViolation> check_closure_symmetry(
    const ProblemInstance& instance, ElementSet y);

}  // namespace gsp

#endif  // GSP_CLOSURE_HPP_
