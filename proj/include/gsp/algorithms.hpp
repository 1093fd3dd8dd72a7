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

#ifndef GSP_ALGORITHMS_HPP_
#define GSP_ALGORITHMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "gsp/element_set.hpp"
#include "gsp/family.hpp"
#include "gsp/problems.hpp"

namespace gsp {

/// Accessibility chain: links[0] is empty, links.back() the target, and each
/// link adds exactly one element to its predecessor.
struct Chain {
  std::vector<ElementSet> links;
};

bool is_chain(const FeasibleFamily& fam, const Chain& chain);

/// Searches bottom-up, trying the elements of y in `preference` order first
/// (remaining elements follow in ground order). Returns nullopt when no chain
/// of members reaches y. Throws std::domain_error if y is not a member.
std::optional<Chain> accessibility_chain(
    const FeasibleFamily& fam, ElementSet y,
    std::span<const std::size_t> preference = {});

// Tie-break policies for the greedy constructor.
struct Lexicographic {};
struct SeededRandom {
  std::uint64_t seed = 0;
};
struct ExplicitOrder {
  std::vector<std::size_t> order;  // ground indices, highest priority first
};
using TieBreakPolicy = std::variant<Lexicographic, SeededRandom, ExplicitOrder>;

enum class Outcome { kSolution, kStuck, kYes, kNo };
std::string_view outcome_name(Outcome o);

struct Iteration {
  ElementSet current;                // Y(i)
  std::optional<std::size_t> chosen;  // absent on the final record
  std::size_t candidates = 0;        // admissible elements at this state
};

struct RunTrace {
  std::vector<Iteration> iterations;
  Outcome outcome = Outcome::kStuck;
  ElementSet output;
  std::size_t states_explored = 0;
};

/// Greedy augmentation from the empty set: repeatedly add an element keeping
/// the set feasible, until none exists. The output is returned whether or not
/// it is a basis; the outcome tells which.
RunTrace greedy_solve(const ProblemInstance& instance,
                      const TieBreakPolicy& policy = Lexicographic{});
RunTrace greedy_solve(SearchProblem p, const Graph& g,
                      const TieBreakPolicy& policy = Lexicographic{},
                      const Caps& caps = {});

enum class VerifyMode {
  kAllOrders,    // backtrack over every choice order inside y
  kSinglePass,  // single pass, first admissible element in ground order
};

/// Certificate check by reconstruction inside y: starting from the empty set,
/// answer YES as soon as the current set's closure is the whole ground set,
/// otherwise extend by an element of y keeping feasibility; NO when stuck.
/// All-orders mode throws ResourceError when |y| exceeds caps.certificate.
RunTrace verify_certificate(const ProblemInstance& instance, ElementSet y,
                            VerifyMode mode = VerifyMode::kAllOrders);
RunTrace verify_certificate(SearchProblem p, const Graph& g, ElementSet y,
                            VerifyMode mode = VerifyMode::kAllOrders,
                            const Caps& caps = {});

}  // namespace gsp

#endif  // GSP_ALGORITHMS_HPP_
