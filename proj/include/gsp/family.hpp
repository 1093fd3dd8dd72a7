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

#ifndef GSP_FAMILY_HPP_
#define GSP_FAMILY_HPP_

#include <cstddef>
#include <vector>

#include "gsp/element_set.hpp"
#include "gsp/errors.hpp"
#include "gsp/graph.hpp"
#include "gsp/problems.hpp"

namespace gsp {

/// The set system (X, I): a ground set, its feasible subsets and the
/// distinguished bases.
///
/// Members and bases are kept deduplicated in canonical order. The empty set
/// is always a member and every basis is a member; the constructor rejects
/// anything else with std::invalid_argument.
class FeasibleFamily {
 public:
  FeasibleFamily(GroundSet ground, std::vector<ElementSet> members,
                 std::vector<ElementSet> bases);

  /// Abstract set system whose bases are its inclusion-maximal members.
  static FeasibleFamily with_maximal_bases(GroundSet ground,
                                           std::vector<ElementSet> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<ElementSet>& members() const { return members_; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t size() const { return members_.size(); }

  bool contains(ElementSet s) const {
    return s.subset_of(ground_.all()) && table_[s.bits()];
  }
  bool is_basis(ElementSet s) const;

  friend bool operator==(const FeasibleFamily& a, const FeasibleFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_ &&
           a.bases_ == b.bases_;
  }

 private:
  GroundSet ground_;
  std::vector<ElementSet> members_;
  std::vector<ElementSet> bases_;
  std::vector<bool> table_;  // indexed by subset bits
};

/// Members are every subset passing the fast feasibility predicate; bases are
/// the solutions of the full instance. Throws ResourceError above caps.family
/// and std::domain_error when the empty set is infeasible (Hamiltonian cycle
/// on a disconnected graph).
FeasibleFamily enumerate_family(SearchProblem p, const Graph& g,
                                const Caps& caps = {});
FeasibleFamily enumerate_family(const ProblemInstance& instance);

/// Size of the largest member inside s.
std::size_t rank(const FeasibleFamily& fam, ElementSet s);

/// { e in X : rank(s + e) = rank(s) }. Computed literally for any family;
/// it is only a matroid closure when the family is a matroid.
ElementSet matroid_closure(const FeasibleFamily& fam, ElementSet s);

}  // namespace gsp

#endif  // GSP_FAMILY_HPP_
