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

// JSON encodings of graphs, families and reports. Formats are described in
// docs/formats.md with schemas under docs/schemas/.

#ifndef GSP_IO_HPP_
#define GSP_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "gsp/algorithms.hpp"
#include "gsp/axioms.hpp"
#include "gsp/closure.hpp"
#include "gsp/family.hpp"
#include "gsp/graph.hpp"

namespace gsp::io {

using Json = nlohmann::ordered_json;

// Graphs: {"vertices":[ids],"edges":{"id":[u,v],...}}. A vertex may also be
// given as an id array (a merged label) and an endpoint as such an array.
Graph graph_from_json(const Json& doc);
Json graph_to_json(const Graph& g);
/// Throws ParseError carrying the byte offset of a syntax error, or the JSON
/// path of a schema error.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

Json element_to_json(const GroundSet& ground, std::size_t i);
Json subset_to_json(const GroundSet& ground, ElementSet s);
Json subsets_to_json(const GroundSet& ground,
                     const std::vector<ElementSet>& sets);

// Families: {"ground":[...],"members":[[...],...],"bases":[[...],...]}.
Json family_to_json(const FeasibleFamily& fam);
FeasibleFamily family_from_json(const Json& doc);

Json verdict_to_json(const GroundSet& ground, const AxiomVerdict& v);
Json audit_to_json(const GroundSet& ground, const AuditReport& report);
Json closure_to_json(const GroundSet& ground, const ClosureReport& report);
Json specific_closure_to_json(const GroundSet& ground,
                              const SpecificClosure& cl);
Json growth_to_json(const GroundSet& ground, const GrowthTrace& trace);
Json trace_to_json(const GroundSet& ground, const RunTrace& trace);
Json chain_to_json(const GroundSet& ground, const Chain& chain);
Json class_verdict_to_json(const ClassVerdict& v);

}  // namespace gsp::io

#endif  // GSP_IO_HPP_
