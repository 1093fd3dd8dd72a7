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

#include "gsp/axioms.hpp"

#include <algorithm>

namespace gsp {

namespace {

AxiomVerdict holds(Axiom a) { return AxiomVerdict{a, true, std::nullopt}; }

AxiomVerdict fails(Axiom a, AxiomWitness w) {
  return AxiomVerdict{a, false, std::move(w)};
}

// True iff some element of pool extends base to a member.
bool extends_within(const FeasibleFamily& fam, ElementSet base,
                    ElementSet pool) {
  bool found = false;
  pool.for_each([&](std::size_t e) {
    if (!found && fam.contains(base.with(e))) found = true;
  });
  return found;
}

bool drops_within(const FeasibleFamily& fam, ElementSet set) {
  bool found = false;
  set.for_each([&](std::size_t e) {
    if (!found && fam.contains(set.without(e))) found = true;
  });
  return found;
}

// Members by descending size, canonical within a size.
std::vector<ElementSet> largest_first(const FeasibleFamily& fam) {
  std::vector<ElementSet> out = fam.members();
  std::stable_sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return a.size() > b.size();
  });
  return out;
}

}  // namespace

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kM1:
      return "M1";
    case Axiom::kM2:
      return "M2";
    case Axiom::kG1:
      return "G1";
    case Axiom::kM2Prime:
      return "M2'";
    case Axiom::kM2DoublePrime:
      return "M2''";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view text) {
  if (text == "M1") return Axiom::kM1;
  if (text == "M2") return Axiom::kM2;
  if (text == "G1") return Axiom::kG1;
  if (text == "M2'" || text == "M2p") return Axiom::kM2Prime;
  if (text == "M2''" || text == "M2pp") return Axiom::kM2DoublePrime;
  return std::nullopt;
}

AxiomVerdict check_M1(const FeasibleFamily& fam) {
  for (ElementSet m : fam.members()) {
    for (std::size_t e : m.elements()) {
      if (!fam.contains(m.without(e))) {
        return fails(Axiom::kM1, AxiomWitness{{m}, e, ElementSet{}});
      }
    }
  }
  return holds(Axiom::kM1);
}

AxiomVerdict check_M2(const FeasibleFamily& fam) {
  // Largest pairs first, so the reported witness is the most informative one.
  const auto ordered = largest_first(fam);
  for (ElementSet big : ordered) {
    for (ElementSet small : ordered) {
      if (small.size() >= big.size()) continue;
      const ElementSet pool = big - small;
      if (!extends_within(fam, small, pool)) {
        return fails(Axiom::kM2, AxiomWitness{{big, small}, std::nullopt, pool});
      }
    }
  }
  return holds(Axiom::kM2);
}

AxiomVerdict check_G1(const FeasibleFamily& fam) {
  for (ElementSet m : fam.members()) {
    if (!m.empty() && !drops_within(fam, m)) {
      return fails(Axiom::kG1, AxiomWitness{{m}, std::nullopt, m});
    }
  }
  return holds(Axiom::kG1);
}

AxiomVerdict check_M2_prime(const FeasibleFamily& fam) {
  const ElementSet all = fam.ground().all();
  for (ElementSet m : fam.members()) {
    if (fam.is_basis(m)) continue;
    if (!extends_within(fam, m, all - m)) {
      return fails(Axiom::kM2Prime,
                   AxiomWitness{{m}, std::nullopt, all - m});
    }
  }
  return holds(Axiom::kM2Prime);
}

AxiomVerdict check_M2_doubleprime(const FeasibleFamily& fam) {
  for (ElementSet inner : fam.members()) {
    for (ElementSet outer : fam.members()) {
      if (!inner.proper_subset_of(outer)) continue;
      if (!extends_within(fam, inner, outer - inner)) {
        return fails(Axiom::kM2DoublePrime,
                     AxiomWitness{{inner, outer}, std::nullopt, outer - inner});
      }
    }
  }
  return holds(Axiom::kM2DoublePrime);
}

AxiomVerdict check_axiom(const FeasibleFamily& fam, Axiom a) {
  switch (a) {
    case Axiom::kM1:
      return check_M1(fam);
    case Axiom::kM2:
      return check_M2(fam);
    case Axiom::kG1:
      return check_G1(fam);
    case Axiom::kM2Prime:
      return check_M2_prime(fam);
    case Axiom::kM2DoublePrime:
      return check_M2_doubleprime(fam);
  }
  return holds(a);
}

bool replay_witness(const FeasibleFamily& fam, const AxiomVerdict& verdict) {
  if (verdict.holds || !verdict.witness) return false;
  const AxiomWitness& w = *verdict.witness;
  auto member = [&](std::size_t k) {
    return k < w.sets.size() && fam.contains(w.sets[k]);
  };
  switch (verdict.axiom) {
    case Axiom::kM1:
      return member(0) && w.element && w.sets[0].contains(*w.element) &&
             !fam.contains(w.sets[0].without(*w.element));
    case Axiom::kM2:
      return member(0) && member(1) && w.sets[0].size() > w.sets[1].size() &&
             w.tried == w.sets[0] - w.sets[1] &&
             !extends_within(fam, w.sets[1], w.tried);
    case Axiom::kG1:
      return member(0) && !w.sets[0].empty() && w.tried == w.sets[0] &&
             !drops_within(fam, w.sets[0]);
    case Axiom::kM2Prime:
      return member(0) && !fam.is_basis(w.sets[0]) &&
             w.tried == fam.ground().all() - w.sets[0] &&
             !extends_within(fam, w.sets[0], w.tried);
    case Axiom::kM2DoublePrime:
      return member(0) && member(1) && w.sets[0].proper_subset_of(w.sets[1]) &&
             w.tried == w.sets[1] - w.sets[0] &&
             !extends_within(fam, w.sets[0], w.tried);
  }
  return false;
}

bool AuditReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.holds; });
}

AuditReport audit_verdicts(const std::array<AxiomVerdict, 5>& verdicts) {
  AuditReport report;
  report.verdicts = verdicts;
  for (const Implication& imp : kClaimedImplications) {
    const AxiomVerdict& premise = report.verdict(imp.premise);
    const AxiomVerdict& conclusion = report.verdict(imp.conclusion);
    if (premise.holds && !conclusion.holds) {
      report.violations.push_back(ImplicationViolation{imp, premise, conclusion});
    }
  }
  return report;
}

AuditReport implication_audit(const FeasibleFamily& fam) {
  std::array<AxiomVerdict, 5> verdicts;
  for (Axiom a : kAllAxioms) {
    verdicts[static_cast<std::size_t>(a)] = check_axiom(fam, a);
  }
  return audit_verdicts(verdicts);
}

ClassLabels labels_from_flags(const std::array<bool, 5>& flags) {
  auto f = [&flags](Axiom a) { return flags[static_cast<std::size_t>(a)]; };
  ClassLabels labels;
  labels.matroid = f(Axiom::kM1) && f(Axiom::kM2);
  labels.in_p = f(Axiom::kM2Prime);
  labels.p_complete = f(Axiom::kM1) && f(Axiom::kM2Prime);
  labels.in_np = f(Axiom::kM2DoublePrime);
  labels.np_complete_statement = f(Axiom::kM1);
  labels.np_complete_proof = f(Axiom::kM1) && f(Axiom::kM2DoublePrime);
  return labels;
}

ClassVerdict classify(SearchProblem p, std::span<const Graph> corpus,
                      const Caps& caps) {
  ClassVerdict verdict;
  verdict.flags.fill(true);
  verdict.corpus_size = corpus.size();
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const FeasibleFamily fam = enumerate_family(p, corpus[gi], caps);
    for (Axiom a : kAllAxioms) {
      const auto k = static_cast<std::size_t>(a);
      if (!check_axiom(fam, a).holds) {
        verdict.flags[k] = false;
        if (!verdict.first_failure[k]) verdict.first_failure[k] = gi;
      }
    }
  }
  verdict.labels = labels_from_flags(verdict.flags);
  verdict.reading_note =
      "NP-complete is reported under two readings: 'statement' requires M1 "
      "alone, 'proof' requires M1 and M2''. Neither is preferred; labels are "
      "the class mapping applied to the corpus flags, not complexity facts.";
  return verdict;
}

}  // namespace gsp
