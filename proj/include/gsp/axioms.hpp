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

#ifndef GSP_AXIOMS_HPP_
#define GSP_AXIOMS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsp/element_set.hpp"
#include "gsp/family.hpp"

namespace gsp {

//   M1   heredity             every member minus one element is a member
//   M2   exchange             |I1| > |I2| lends some e in I1\I2 to I2
//   G1   accessibility        every nonempty member drops some element
//   M2'  augmentability       every non-basis member gains some element of X
//   M2'' within-augmentability I in Y gains some element of Y\I
enum class Axiom { kM1, kM2, kG1, kM2Prime, kM2DoublePrime };

inline constexpr std::array<Axiom, 5> kAllAxioms = {
    Axiom::kM1, Axiom::kM2, Axiom::kG1, Axiom::kM2Prime,
    Axiom::kM2DoublePrime};

std::string_view axiom_name(Axiom a);
/// Accepts "M1", "M2", "G1", "M2'", "M2''" and the spellings "M2p", "M2pp".
std::optional<Axiom> parse_axiom(std::string_view text);

/// Counterexample to an axiom.
///
///   M1:   sets = {I},      element = e with I\e missing
///   M2:   sets = {I1, I2}, tried = I1\I2
///   G1:   sets = {I},      tried = I
///   M2':  sets = {I},      tried = X\I
///   M2'': sets = {I, Y},   tried = Y\I
///
/// `tried` is the universe of elements every one of which fails.
struct AxiomWitness {
  std::vector<ElementSet> sets;
  std::optional<std::size_t> element;
  ElementSet tried;
};

struct AxiomVerdict {
  Axiom axiom = Axiom::kM1;
  bool holds = true;
  std::optional<AxiomWitness> witness;  // present iff !holds
};

AxiomVerdict check_M1(const FeasibleFamily& fam);
AxiomVerdict check_M2(const FeasibleFamily& fam);
AxiomVerdict check_G1(const FeasibleFamily& fam);
AxiomVerdict check_M2_prime(const FeasibleFamily& fam);
AxiomVerdict check_M2_doubleprime(const FeasibleFamily& fam);
AxiomVerdict check_axiom(const FeasibleFamily& fam, Axiom a);

/// True iff the witness of a failing verdict still demonstrates the failure
/// against fam. A holding verdict replays as false.
bool replay_witness(const FeasibleFamily& fam, const AxiomVerdict& verdict);

// Implication audit ---------------------------------------------------------

struct Implication {
  Axiom premise;
  Axiom conclusion;
};

/// M2 => M2', M2' => M2'', M1 => G1, M1 => M2''.
inline constexpr std::array<Implication, 4> kClaimedImplications = {{
    {Axiom::kM2, Axiom::kM2Prime},
    {Axiom::kM2Prime, Axiom::kM2DoublePrime},
    {Axiom::kM1, Axiom::kG1},
    {Axiom::kM1, Axiom::kM2DoublePrime},
}};

struct ImplicationViolation {
  Implication implication;
  AxiomVerdict premise;
  AxiomVerdict conclusion;
};

struct AuditReport {
  std::array<AxiomVerdict, 5> verdicts;  // in kAllAxioms order
  std::vector<ImplicationViolation> violations;

  const AxiomVerdict& verdict(Axiom a) const {
    return verdicts[static_cast<std::size_t>(a)];
  }
  bool consistent() const { return violations.empty(); }
  bool all_hold() const;
};

AuditReport audit_verdicts(const std::array<AxiomVerdict, 5>& verdicts);
AuditReport implication_audit(const FeasibleFamily& fam);

// Classification ------------------------------------------------------------

/// Labels a conjunction of axiom flags receives under the class mapping
/// M2' -> P, M1 & M2' -> P-complete, M2'' -> NP, and NP-complete under two
/// readings: M1 alone (the "statement" reading) or M1 & M2'' (the "proof"
/// reading).
struct ClassLabels {
  bool matroid = false;  // M1 & M2
  bool in_p = false;
  bool p_complete = false;
  bool in_np = false;
  bool np_complete_statement = false;
  bool np_complete_proof = false;
};

ClassLabels labels_from_flags(const std::array<bool, 5>& flags);

struct ClassVerdict {
  std::array<bool, 5> flags{};  // conjunction over the corpus, kAllAxioms order
  // Index of the first corpus graph on which each axiom fails.
  std::array<std::optional<std::size_t>, 5> first_failure{};
  ClassLabels labels;
  std::string reading_note;
  std::size_t corpus_size = 0;

  bool flag(Axiom a) const { return flags[static_cast<std::size_t>(a)]; }
};

/// Axioms must hold on every corpus graph to be flagged.
ClassVerdict classify(SearchProblem p, std::span<const Graph> corpus,
                      const Caps& caps = {});

}  // namespace gsp

#endif  // GSP_AXIOMS_HPP_
