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

#include "gsp/closure.hpp"

#include <algorithm>
#include <stdexcept>

#include "union_find.hpp"

namespace gsp {

namespace {

void require_feasible(const ProblemInstance& instance, ElementSet y,
                      const char* op) {
  if (!instance.is_feasible(y)) {
    throw std::domain_error(std::string(op) + ": " +
                            instance.ground().format(y) + " is not feasible");
  }
}

// Closure of y inside H = G/B by the loop-or-cycle rule, with H built through
// graph-core contraction.
ElementSet hamiltonian_rule(const ProblemInstance& instance, ElementSet y,
                            ElementSet certificate) {
  const GroundSet& ground = instance.ground();
  const Graph h = instance.realize(ground.all() - certificate);

  internal::UnionFind uf(h.vertex_count());
  y.for_each([&](std::size_t i) {
    const Endpoints& e = h.endpoints(ground.name(i));
    uf.unite(e.first, e.second);
  });

  ElementSet out = y;
  for (const auto& [id, e] : h.edges()) {
    const std::size_t i = *ground.index_of(id);
    if (y.contains(i)) continue;
    if (e.is_loop() || uf.find(e.first) == uf.find(e.second)) {
      out = out.with(i);
    }
  }
  return out;
}

}  // namespace

ElementSet ClosureReport::hull() const {
  ElementSet out = base;
  for (ElementSet s : closed_sets) out = out | s;
  return out;
}

ClosureReport closure_generic(const ProblemInstance& instance, ElementSet y) {
  require_feasible(instance, y, "closure_generic");
  const ElementSet free = instance.ground().all() - y;

  std::vector<ElementSet> qualifying;
  for_each_subset(free, [&](ElementSet extra) {
    if (instance.solves(y, y | extra)) qualifying.push_back(y | extra);
  });

  ClosureReport report;
  report.base = y;
  for (ElementSet s : qualifying) {
    const bool maximal =
        std::none_of(qualifying.begin(), qualifying.end(),
                     [s](ElementSet o) { return s.proper_subset_of(o); });
    if (maximal) report.closed_sets.push_back(s);
  }
  std::sort(report.closed_sets.begin(), report.closed_sets.end(),
            CanonicalLess{});
  report.unique = report.closed_sets.size() == 1;

  std::vector<ElementSet> classes;
  for (std::size_t i = 0; i < report.closed_sets.size(); ++i) {
    const ElementSet cls = report.closed_sets[i] - y;
    for (std::size_t j = 0; j < i; ++j) {
      if (classes[j].intersects(cls)) {
        report.partition =
            PartitionViolation{report.closed_sets[j], report.closed_sets[i]};
        return report;
      }
    }
    classes.push_back(cls);
  }
  report.partition = std::move(classes);
  return report;
}

ClosureReport closure_generic(SearchProblem p, const Graph& g, ElementSet y,
                              const Caps& caps) {
  return closure_generic(ProblemInstance(p, g, caps), y);
}

SpecificClosure closure_specific(const ProblemInstance& instance,
                                 ElementSet y) {
  require_feasible(instance, y, "closure_specific");
  SpecificClosure out;
  switch (instance.problem().predicate()) {
    case Predicate::kMaximalIndependentSet:
      out.sets.push_back(instance.neighbourhood_closure(y));
      break;
    case Predicate::kSpanningTree:
      out.sets.push_back(instance.span(y));
      break;
    case Predicate::kHamiltonianCycle: {
      for (ElementSet b : instance.minimal_hamiltonian_certificates(y)) {
        out.sets.push_back(hamiltonian_rule(instance, y, b));
      }
      std::sort(out.sets.begin(), out.sets.end(), CanonicalLess{});
      out.sets.erase(std::unique(out.sets.begin(), out.sets.end()),
                     out.sets.end());
      out.ambiguous = out.sets.size() > 1;
      break;
    }
  }
  return out;
}

SpecificClosure closure_specific(SearchProblem p, const Graph& g, ElementSet y,
                                 const Caps& caps) {
  return closure_specific(ProblemInstance(p, g, caps), y);
}

GrowthTrace grow_closure_trace(const ProblemInstance& instance, ElementSet y,
                               std::span<const std::size_t> targets) {
  const GroundSet& ground = instance.ground();
  for (std::size_t t : targets) {
    if (t >= ground.size()) {
      throw std::domain_error("grow_closure_trace: target outside ground");
    }
  }
  const ClosureReport seed = closure_generic(instance, y);
  const ElementSet seed_hull = seed.hull();
  for (std::size_t t : targets) {
    if (seed_hull.contains(t)) {
      throw std::domain_error("grow_closure_trace: target " + ground.name(t) +
                              " already lies in the closure of " +
                              ground.format(y));
    }
  }

  GrowthTrace trace;
  trace.start = seed.closed_sets.front();
  ElementSet t = trace.start;
  while (t != ground.all()) {
    const std::size_t x = (ground.all() - t).front();
    t = t.with(x);

    // Solutions of the realised instance that extend the base.
    ElementSet reached;
    for_each_subset(t - y, [&](ElementSet extra) {
      const ElementSet z = y | extra;
      if (instance.solves(z, t)) {
        reached = reached | closure_generic(instance, z).hull();
      }
    });
    trace.steps.push_back(GrowthStep{x, t, reached});

    for (std::size_t target : targets) {
      if (reached.contains(target)) {
        trace.terminal = target;
        return trace;
      }
    }
  }
  return trace;
}

std::optional<SymmetryViolation> check_closure_symmetry(
    const ProblemInstance& instance, ElementSet y) {
  require_feasible(instance, y, "check_closure_symmetry");
  const std::size_t n = instance.size();
  std::vector<std::optional<ElementSet>> hulls(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (y.contains(x) || !instance.is_feasible(y.with(x))) continue;
    hulls[x] = closure_generic(instance, y.with(x)).hull();
  }
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    if (!hulls[x1]) continue;
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
      if (!hulls[x2]) continue;
      const bool forward = hulls[x2]->contains(x1);
      const bool backward = hulls[x1]->contains(x2);
      if (forward != backward) {
        return SymmetryViolation{y, x1, x2, forward, backward};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gsp
