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

#include "gsp/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsp {

namespace {

void canonicalize(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

FeasibleFamily::FeasibleFamily(GroundSet ground,
                               std::vector<ElementSet> members,
                               std::vector<ElementSet> bases)
    : ground_(std::move(ground)),
      members_(std::move(members)),
      bases_(std::move(bases)) {
  if (ground_.size() > Caps::kCeiling) {
    throw std::invalid_argument("family ground set exceeds the table ceiling");
  }
  canonicalize(members_);
  canonicalize(bases_);
  table_.assign(std::size_t{1} << ground_.size(), false);
  for (ElementSet m : members_) {
    if (!m.subset_of(ground_.all())) {
      throw std::invalid_argument("member outside the ground set");
    }
    table_[m.bits()] = true;
  }
  if (!table_[0]) throw std::invalid_argument("family lacks the empty set");
  for (ElementSet b : bases_) {
    if (!contains(b)) throw std::invalid_argument("basis is not a member");
  }
}

FeasibleFamily FeasibleFamily::with_maximal_bases(
    GroundSet ground, std::vector<ElementSet> members) {
  std::vector<ElementSet> bases;
  for (ElementSet m : members) {
    const bool maximal =
        std::none_of(members.begin(), members.end(),
                     [m](ElementSet o) { return m.proper_subset_of(o); });
    if (maximal) bases.push_back(m);
  }
  return FeasibleFamily(std::move(ground), std::move(members),
                        std::move(bases));
}

bool FeasibleFamily::is_basis(ElementSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s, CanonicalLess{});
}

FeasibleFamily enumerate_family(const ProblemInstance& instance) {
  require_cap("family", std::min(instance.caps().family, Caps::kCeiling),
              instance.size());
  // Only the Hamiltonian cycle problem can get here: a disconnected graph has
  // no connected contraction minor, hence no feasible set at all.
  if (!instance.is_feasible(ElementSet{})) {
    throw std::domain_error("enumerate_family: the empty set is infeasible (" +
                            std::string(instance.problem().token()) +
                            " on a disconnected graph); no set system");
  }
  std::vector<ElementSet> members;
  for_each_subset(instance.ground().all(), [&](ElementSet y) {
    if (instance.is_feasible(y)) members.push_back(y);
  });
  return FeasibleFamily(instance.ground(), std::move(members),
                        instance.solutions());
}

FeasibleFamily enumerate_family(SearchProblem p, const Graph& g,
                                const Caps& caps) {
  return enumerate_family(ProblemInstance(p, g, caps));
}

std::size_t rank(const FeasibleFamily& fam, ElementSet s) {
  std::size_t best = 0;
  for (ElementSet m : fam.members()) {
    if (m.size() > best && m.subset_of(s)) best = m.size();
  }
  return best;
}

ElementSet matroid_closure(const FeasibleFamily& fam, ElementSet s) {
  const std::size_t base_rank = rank(fam, s);
  ElementSet out;
  for (std::size_t e = 0; e < fam.ground().size(); ++e) {
    if (rank(fam, s.with(e)) == base_rank) out = out.with(e);
  }
  return out;
}

}  // namespace gsp
