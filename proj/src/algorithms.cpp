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

#include "gsp/algorithms.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "gsp/closure.hpp"

namespace gsp {

namespace {

// Element priorities: listed elements first, in list order, then the rest in
// ground order.
std::vector<std::size_t> priorities(std::size_t n,
                                    std::span<const std::size_t> order) {
  std::vector<std::size_t> prio(n, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (std::size_t e : order) {
    if (e < n && prio[e] == std::numeric_limits<std::size_t>::max()) {
      prio[e] = next++;
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (prio[e] == std::numeric_limits<std::size_t>::max()) prio[e] = next++;
  }
  return prio;
}

std::vector<std::size_t> by_priority(ElementSet pool,
                                     const std::vector<std::size_t>& prio) {
  std::vector<std::size_t> out = pool.elements();
  std::sort(out.begin(), out.end(),
            [&prio](std::size_t a, std::size_t b) { return prio[a] < prio[b]; });
  return out;
}

std::vector<std::size_t> admissible(const ProblemInstance& instance,
                                    ElementSet current, ElementSet pool) {
  std::vector<std::size_t> out;
  (pool - current).for_each([&](std::size_t x) {
    if (instance.is_feasible(current.with(x))) out.push_back(x);
  });
  return out;
}

bool closure_is_everything(const ProblemInstance& instance, ElementSet y) {
  const SpecificClosure cl = closure_specific(instance, y);
  const ElementSet all = instance.ground().all();
  return std::any_of(cl.sets.begin(), cl.sets.end(),
                     [all](ElementSet s) { return s == all; });
}

class Reconstruction {
 public:
  Reconstruction(const ProblemInstance& instance, ElementSet certificate)
      : instance_(instance), certificate_(certificate) {}

  bool search(ElementSet current, RunTrace& trace) {
    ++trace.states_explored;
    if (closure_is_everything(instance_, current)) {
      trace.iterations.push_back(Iteration{current, std::nullopt, 0});
      trace.output = current;
      return true;
    }
    if (dead_.count(current.bits()) != 0) return false;
    const auto choices = admissible(instance_, current, certificate_);
    for (std::size_t x : choices) {
      trace.iterations.push_back(Iteration{current, x, choices.size()});
      if (search(current.with(x), trace)) return true;
      trace.iterations.pop_back();
    }
    dead_.insert(current.bits());
    return false;
  }

 private:
  const ProblemInstance& instance_;
  ElementSet certificate_;
  std::unordered_set<ElementSet::Bits> dead_;
};

RunTrace strict_pass(const ProblemInstance& instance, ElementSet y) {
  RunTrace trace;
  ElementSet current;
  while (true) {
    ++trace.states_explored;
    if (closure_is_everything(instance, current)) {
      trace.iterations.push_back(Iteration{current, std::nullopt, 0});
      trace.outcome = Outcome::kYes;
      break;
    }
    const auto choices = admissible(instance, current, y);
    if (choices.empty()) {
      trace.iterations.push_back(Iteration{current, std::nullopt, 0});
      trace.outcome = Outcome::kNo;
      break;
    }
    trace.iterations.push_back(Iteration{current, choices.front(),
                                         choices.size()});
    current = current.with(choices.front());
  }
  trace.output = current;
  return trace;
}

}  // namespace

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kSolution:
      return "solution";
    case Outcome::kStuck:
      return "stuck";
    case Outcome::kYes:
      return "yes";
    case Outcome::kNo:
      return "no";
  }
  return "?";
}

bool is_chain(const FeasibleFamily& fam, const Chain& chain) {
  if (chain.links.empty() || !chain.links.front().empty()) return false;
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const ElementSet link = chain.links[i];
    if (!fam.contains(link) || link.size() != i) return false;
    if (i > 0 && !chain.links[i - 1].proper_subset_of(link)) return false;
  }
  return true;
}

std::optional<Chain> accessibility_chain(
    const FeasibleFamily& fam, ElementSet y,
    std::span<const std::size_t> preference) {
  if (!fam.contains(y)) {
    throw std::domain_error("accessibility_chain: " + fam.ground().format(y) +
                            " is not a member");
  }
  const auto prio = priorities(fam.ground().size(), preference);
  std::unordered_set<ElementSet::Bits> dead;
  Chain chain;
  chain.links.push_back(ElementSet{});

  auto climb = [&](auto&& self, ElementSet current) -> bool {
    if (current == y) return true;
    if (dead.count(current.bits()) != 0) return false;
    for (std::size_t x : by_priority(y - current, prio)) {
      const ElementSet next = current.with(x);
      if (!fam.contains(next)) continue;
      chain.links.push_back(next);
      if (self(self, next)) return true;
      chain.links.pop_back();
    }
    dead.insert(current.bits());
    return false;
  };
  if (!climb(climb, ElementSet{})) return std::nullopt;
  return chain;
}

RunTrace greedy_solve(const ProblemInstance& instance,
                      const TieBreakPolicy& policy) {
  const std::size_t n = instance.size();
  std::mt19937_64 rng;
  std::vector<std::size_t> prio = priorities(n, {});
  if (const auto* random = std::get_if<SeededRandom>(&policy)) {
    rng.seed(random->seed);
  } else if (const auto* explicit_order = std::get_if<ExplicitOrder>(&policy)) {
    prio = priorities(n, explicit_order->order);
  }

  RunTrace trace;
  ElementSet current;
  while (true) {
    ++trace.states_explored;
    auto choices = admissible(instance, current, instance.ground().all());
    if (choices.empty()) {
      trace.iterations.push_back(Iteration{current, std::nullopt, 0});
      break;
    }
    std::size_t pick = 0;
    if (std::holds_alternative<SeededRandom>(policy)) {
      pick = std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(
          rng);
    } else {
      pick = static_cast<std::size_t>(
          std::min_element(choices.begin(), choices.end(),
                           [&prio](std::size_t a, std::size_t b) {
                             return prio[a] < prio[b];
                           }) -
          choices.begin());
    }
    trace.iterations.push_back(
        Iteration{current, choices[pick], choices.size()});
    current = current.with(choices[pick]);
  }
  trace.output = current;
  trace.outcome =
      instance.is_solution(current) ? Outcome::kSolution : Outcome::kStuck;
  return trace;
}

RunTrace greedy_solve(SearchProblem p, const Graph& g,
                      const TieBreakPolicy& policy, const Caps& caps) {
  return greedy_solve(ProblemInstance(p, g, caps), policy);
}

RunTrace verify_certificate(const ProblemInstance& instance, ElementSet y,
                            VerifyMode mode) {
  if (!y.subset_of(instance.ground().all())) {
    throw std::domain_error("verify_certificate: certificate outside ground");
  }
  if (mode == VerifyMode::kSinglePass) return strict_pass(instance, y);

  require_cap("certificate",
              std::min(instance.caps().certificate, Caps::kCeiling), y.size());
  RunTrace trace;
  Reconstruction search(instance, y);
  if (search.search(ElementSet{}, trace)) {
    trace.outcome = Outcome::kYes;
    return trace;
  }
  // Report the first-choice path on failure; it is the strict pass.
  RunTrace first = strict_pass(instance, y);
  first.states_explored = trace.states_explored;
  return first;
}

RunTrace verify_certificate(SearchProblem p, const Graph& g, ElementSet y,
                            VerifyMode mode, const Caps& caps) {
  return verify_certificate(ProblemInstance(p, g, caps), y, mode);
}

}  // namespace gsp
