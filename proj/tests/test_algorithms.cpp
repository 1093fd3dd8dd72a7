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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "gsp/algorithms.hpp"
#include "gsp/family.hpp"
#include "gsp/fixtures.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using gsp::ElementSet;
using gsp::Outcome;
using gsp::ProblemInstance;
using gsp::SearchProblem;
using gsp::VerifyMode;
using testing::set_of;

namespace {

std::vector<std::size_t> indices(const gsp::GroundSet& x,
                                 const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(*x.index_of(n));
  return out;
}

std::vector<ElementSet> chosen_path(const gsp::RunTrace& trace) {
  std::vector<ElementSet> out;
  for (const auto& it : trace.iterations) out.push_back(it.current);
  return out;
}

}  // namespace

TEST_CASE("greedy on fig1: stuck under e first, basis under lexicographic") {
  const ProblemInstance hc(SearchProblem::hamiltonian_cycle(),
                           gsp::fixtures::fig1());
  const auto& x = hc.ground();

  const auto stuck = gsp::greedy_solve(
      hc, gsp::ExplicitOrder{indices(x, {"e", "a", "b", "c", "d"})});
  CHECK(stuck.outcome == Outcome::kStuck);
  CHECK(stuck.output == set_of(x, {"a", "d", "e"}));
  CHECK(chosen_path(stuck) ==
        std::vector<ElementSet>{ElementSet{}, set_of(x, {"e"}),
                                set_of(x, {"a", "e"}),
                                set_of(x, {"a", "d", "e"})});
  CHECK(!stuck.iterations.back().chosen.has_value());

  const auto lex = gsp::greedy_solve(hc, gsp::Lexicographic{});
  CHECK(lex.outcome == Outcome::kSolution);
  CHECK(lex.output == set_of(x, {"a", "b", "c", "d"}));
  CHECK(chosen_path(lex) ==
        std::vector<ElementSet>{ElementSet{}, set_of(x, {"a"}),
                                set_of(x, {"a", "b"}),
                                set_of(x, {"a", "b", "c"}),
                                set_of(x, {"a", "b", "c", "d"})});
}

TEST_CASE("greedy over every order of fig1") {
  const ProblemInstance hc(SearchProblem::hamiltonian_cycle(),
                           gsp::fixtures::fig1());
  const ProblemInstance stp(SearchProblem::spanning_tree(),
                            gsp::fixtures::fig1());
  const auto& x = hc.ground();
  const auto hc_family = gsp::enumerate_family(hc);
  std::vector<std::size_t> order(5);
  std::iota(order.begin(), order.end(), 0);
  int stuck = 0;
  do {
    const auto t = gsp::greedy_solve(hc, gsp::ExplicitOrder{order});
    if (t.outcome == Outcome::kStuck) {
      ++stuck;
      CHECK((t.output == set_of(x, {"a", "d", "e"}) ||
             t.output == set_of(x, {"b", "c", "e"})));
      // Stuck outputs are the non-augmentable members.
      CHECK(hc_family.contains(t.output));
      CHECK(!hc_family.is_basis(t.output));
    } else {
      CHECK(t.output == set_of(x, {"a", "b", "c", "d"}));
    }
    // The cycle matroid never gets stuck.
    CHECK(gsp::greedy_solve(stp, gsp::ExplicitOrder{order}).outcome ==
          Outcome::kSolution);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(stuck > 0);
}

TEST_CASE("seeded random greedy is reproducible") {
  const ProblemInstance hc(SearchProblem::hamiltonian_cycle(),
                           gsp::fixtures::fig1());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = gsp::greedy_solve(hc, gsp::SeededRandom{seed});
    const auto b = gsp::greedy_solve(hc, gsp::SeededRandom{seed});
    CHECK(chosen_path(a) == chosen_path(b));
    CHECK(hc.is_feasible(a.output));
  }
}

TEST_CASE("greedy on MIS") {
  const ProblemInstance mis(SearchProblem::maximal_independent_set(),
                            gsp::fixtures::mis_example());
  const auto& v = mis.ground();
  const auto t = gsp::greedy_solve(mis, gsp::Lexicographic{});
  CHECK(t.outcome == Outcome::kSolution);
  CHECK(t.output == set_of(v, {"1", "4"}));
  const auto u = gsp::greedy_solve(mis, gsp::ExplicitOrder{indices(v, {"5"})});
  CHECK(u.output == set_of(v, {"2", "3", "5"}));
}

TEST_CASE("accessibility chains") {
  const auto hc = gsp::enumerate_family(SearchProblem::hamiltonian_cycle(),
                                        gsp::fixtures::fig1());
  const auto& x = hc.ground();
  const auto chain = gsp::accessibility_chain(
      hc, set_of(x, {"a", "b", "c", "d"}), indices(x, {"a", "d", "c", "b"}));
  REQUIRE(chain.has_value());
  CHECK(chain->links == std::vector<ElementSet>{
                            ElementSet{}, set_of(x, {"a"}),
                            set_of(x, {"a", "d"}), set_of(x, {"a", "c", "d"}),
                            set_of(x, {"a", "b", "c", "d"})});
  CHECK(gsp::is_chain(hc, *chain));
  for (auto p : {SearchProblem::spanning_tree(),
                 SearchProblem::hamiltonian_cycle(),
                 SearchProblem::maximal_independent_set()}) {
    const auto g = p == SearchProblem::maximal_independent_set()
                       ? gsp::fixtures::mis_example()
                       : gsp::fixtures::fig1();
    const auto fam = gsp::enumerate_family(p, g);
    for (ElementSet m : fam.members()) {
      const auto c = gsp::accessibility_chain(fam, m);
      REQUIRE(c.has_value());
      CHECK(gsp::is_chain(fam, *c));
      CHECK(c->links.back() == m);
    }
  }
  CHECK_THROWS_AS(gsp::accessibility_chain(hc, set_of(x, {"a", "b", "e"})),
                  std::domain_error);
}

TEST_CASE("chains fail on inaccessible members") {
  gsp::GroundSet x(gsp::GroundKind::kEdges, {"p", "q"});
  const auto fam = gsp::FeasibleFamily::with_maximal_bases(
      x, {ElementSet{}, ElementSet::of({0, 1})});
  CHECK(!gsp::accessibility_chain(fam, ElementSet::of({0, 1})).has_value());
  CHECK(!gsp::is_chain(fam, gsp::Chain{{ElementSet{}, ElementSet::of({0, 1})}}));
}

TEST_CASE("certificate verification on the fixtures") {
  const ProblemInstance hc(SearchProblem::hamiltonian_cycle(),
                           gsp::fixtures::fig1());
  const auto& x = hc.ground();
  const ProblemInstance mis(SearchProblem::maximal_independent_set(),
                            gsp::fixtures::mis_example());
  const auto& v = mis.ground();
  const ProblemInstance stp(SearchProblem::spanning_tree(),
                            gsp::fixtures::fig1());
  for (auto mode : {VerifyMode::kAllOrders, VerifyMode::kSinglePass}) {
    CHECK(gsp::verify_certificate(hc, set_of(x, {"a", "b", "c", "d"}), mode)
              .outcome == Outcome::kYes);
    CHECK(gsp::verify_certificate(hc, set_of(x, {"a", "b", "c"}), mode)
              .outcome == Outcome::kNo);
    CHECK(gsp::verify_certificate(mis, set_of(v, {"1", "4"}), mode).outcome ==
          Outcome::kYes);
    CHECK(gsp::verify_certificate(mis, set_of(v, {"2", "3", "5"}), mode)
              .outcome == Outcome::kYes);
    CHECK(gsp::verify_certificate(mis, set_of(v, {"1", "2"}), mode).outcome ==
          Outcome::kNo);
    for (ElementSet tree : stp.solutions()) {
      CHECK(gsp::verify_certificate(stp, tree, mode).outcome == Outcome::kYes);
    }
  }
}

TEST_CASE("verification accepts supersets of solutions") {
  // The reconstruction only reads elements inside the certificate, so any
  // certificate that contains a solution is accepted.
  const ProblemInstance stp(SearchProblem::spanning_tree(),
                            gsp::fixtures::fig1());
  const auto& x = stp.ground();
  const auto t = gsp::verify_certificate(stp, set_of(x, {"a", "b", "c", "d"}),
                                         VerifyMode::kAllOrders);
  CHECK(t.outcome == Outcome::kYes);
  CHECK(t.output == set_of(x, {"a", "b", "c"}));
  CHECK(!stp.is_solution(set_of(x, {"a", "b", "c", "d"})));
}

TEST_CASE("strict and all-orders modes can disagree") {
  const ProblemInstance mis(SearchProblem::maximal_independent_set(),
                            gsp::fixtures::mis_example());
  const auto& v = mis.ground();
  const auto y = set_of(v, {"1", "2", "3", "5"});
  const auto strict = gsp::verify_certificate(mis, y, VerifyMode::kSinglePass);
  const auto all = gsp::verify_certificate(mis, y, VerifyMode::kAllOrders);
  CHECK(strict.outcome == Outcome::kNo);
  CHECK(strict.output == set_of(v, {"1"}));
  CHECK(all.outcome == Outcome::kYes);
  CHECK(all.output == set_of(v, {"2", "3", "5"}));
}

TEST_CASE("verification is complete and sound up to supersets") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 4;
    const auto g = oracle::random_connected_graph(rng, n, n - 1 + trial % 3);
    for (auto p : {SearchProblem::spanning_tree(),
                   SearchProblem::hamiltonian_cycle(),
                   SearchProblem::maximal_independent_set()}) {
      const ProblemInstance instance(p, g);
      const auto sols = instance.solutions();
      for (std::uint32_t y = 0; y <= instance.ground().all().bits(); ++y) {
        const auto t =
            gsp::verify_certificate(instance, ElementSet(y), VerifyMode::kAllOrders);
        const bool contains_solution =
            std::any_of(sols.begin(), sols.end(),
                        [y](ElementSet s) { return s.subset_of(ElementSet(y)); });
        INFO(p.token() << " " << instance.ground().format(ElementSet(y)));
        if (instance.is_solution(ElementSet(y))) CHECK(t.outcome == Outcome::kYes);
        if (t.outcome == Outcome::kYes) CHECK(contains_solution);
      }
    }
  }
}

TEST_CASE("certificate cap") {
  gsp::Caps caps;
  caps.certificate = 2;
  const ProblemInstance hc(SearchProblem::hamiltonian_cycle(),
                           gsp::fixtures::fig1(), caps);
  const auto y = set_of(hc.ground(), {"a", "b", "c"});
  CHECK_THROWS_AS(gsp::verify_certificate(hc, y, VerifyMode::kAllOrders),
                  gsp::ResourceError);
  CHECK(gsp::verify_certificate(hc, y, VerifyMode::kSinglePass).outcome ==
        Outcome::kNo);
}
