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

#include "gsp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gsp::io {

namespace {

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& what) {
  throw ParseError("at " + path + ": " + what);
}

VertexId vertex_id(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "vertex id must be an integer");
  return j.get<VertexId>();
}

VertexLabel label_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return {vertex_id(j, path)};
  if (!j.is_array() || j.empty()) {
    schema_error(path, "expected an integer id or a non-empty id array");
  }
  VertexLabel label;
  for (std::size_t i = 0; i < j.size(); ++i) {
    label.push_back(vertex_id(j[i], path + "/" + std::to_string(i)));
  }
  std::sort(label.begin(), label.end());
  return label;
}

Json label_to_json(const VertexLabel& label) {
  Json out = Json::array();
  for (VertexId id : label) out.push_back(id);
  return out;
}

// Element name used for lookups when reading families back.
std::string element_name(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  return label_name(label_from(j, path));
}

ElementSet subset_from(const GroundSet& ground, const Json& j,
                       const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an element array");
  ElementSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item = path + "/" + std::to_string(i);
    auto idx = ground.index_of(element_name(j[i], item));
    if (!idx) schema_error(item, "element not in ground");
    s = s.with(*idx);
  }
  return s;
}

std::vector<ElementSet> subsets_from(const GroundSet& ground, const Json& doc,
                                     const char* key) {
  const std::string path = std::string("/") + key;
  if (!doc.contains(key) || !doc[key].is_array()) {
    schema_error(path, "expected an array of element arrays");
  }
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    out.push_back(
        subset_from(ground, doc[key][i], path + "/" + std::to_string(i)));
  }
  return out;
}

Json optional_index(const GroundSet& ground, std::optional<std::size_t> i) {
  return i ? element_to_json(ground, *i) : Json(nullptr);
}

}  // namespace

Graph graph_from_json(const Json& doc) {
  if (!doc.is_object()) schema_error("/", "graph must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    schema_error("/vertices", "expected an array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_object()) {
    schema_error("/edges", "expected an object of id -> [u, v]");
  }

  std::vector<VertexLabel> labels;
  const Json& vertices = doc["vertices"];
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    labels.push_back(label_from(vertices[i], "/vertices/" + std::to_string(i)));
  }
  auto endpoint = [&labels](const Json& j,
                            const std::string& path) -> VertexLabel {
    if (j.is_number_integer()) {
      const VertexId id = j.get<VertexId>();
      for (const auto& label : labels) {
        if (std::binary_search(label.begin(), label.end(), id)) return label;
      }
      schema_error(path, "vertex " + std::to_string(id) + " is not declared");
    }
    return label_from(j, path);
  };

  std::vector<std::pair<EdgeId, std::pair<VertexLabel, VertexLabel>>> edges;
  for (const auto& [id, ends] : doc["edges"].items()) {
    const std::string path = "/edges/" + id;
    if (!ends.is_array() || ends.size() != 2) {
      schema_error(path, "expected a two-element endpoint array");
    }
    edges.push_back(
        {id, {endpoint(ends[0], path + "/0"), endpoint(ends[1], path + "/1")}});
  }
  try {
    return Graph::from_labels(std::move(labels), edges);
  } catch (const std::invalid_argument& e) {
    schema_error("/", e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (const auto& label : g.vertices()) {
    out["vertices"].push_back(label_to_json(label));
  }
  out["edges"] = Json::object();
  for (const auto& [id, e] : g.edges()) {
    out["edges"][id] = Json::array({label_to_json(g.label(e.first)),
                                    label_to_json(g.label(e.second))});
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  return graph_from_json(doc);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json element_to_json(const GroundSet& ground, std::size_t i) {
  if (ground.kind() == GroundKind::kEdges) return ground.name(i);
  const VertexLabel& label = ground.labels().at(i);
  if (label.size() == 1) return label.front();
  return label_to_json(label);
}

Json subset_to_json(const GroundSet& ground, ElementSet s) {
  Json out = Json::array();
  s.for_each([&](std::size_t i) { out.push_back(element_to_json(ground, i)); });
  return out;
}

Json subsets_to_json(const GroundSet& ground,
                     const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (ElementSet s : sets) out.push_back(subset_to_json(ground, s));
  return out;
}

Json family_to_json(const FeasibleFamily& fam) {
  Json out;
  out["ground"] = subset_to_json(fam.ground(), fam.ground().all());
  out["members"] = subsets_to_json(fam.ground(), fam.members());
  out["bases"] = subsets_to_json(fam.ground(), fam.bases());
  return out;
}

FeasibleFamily family_from_json(const Json& doc) {
  if (!doc.is_object()) schema_error("/", "family must be a JSON object");
  if (!doc.contains("ground") || !doc["ground"].is_array()) {
    schema_error("/ground", "expected an element array");
  }
  const Json& elements = doc["ground"];
  const bool edges =
      elements.empty() || std::all_of(elements.begin(), elements.end(),
                                      [](const Json& j) { return j.is_string(); });
  std::vector<std::string> names;
  std::vector<VertexLabel> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::string path = "/ground/" + std::to_string(i);
    if (edges) {
      names.push_back(elements[i].get<std::string>());
    } else {
      labels.push_back(label_from(elements[i], path));
      names.push_back(label_name(labels.back()));
    }
  }
  try {
    GroundSet ground(edges ? GroundKind::kEdges : GroundKind::kVertices,
                     std::move(names), std::move(labels));
    auto members = subsets_from(ground, doc, "members");
    auto bases = subsets_from(ground, doc, "bases");
    return FeasibleFamily(std::move(ground), std::move(members),
                          std::move(bases));
  } catch (const std::invalid_argument& e) {
    schema_error("/", e.what());
  }
}

Json verdict_to_json(const GroundSet& ground, const AxiomVerdict& v) {
  Json out;
  out["axiom"] = std::string(axiom_name(v.axiom));
  out["holds"] = v.holds;
  if (v.witness) {
    Json w;
    w["sets"] = subsets_to_json(ground, v.witness->sets);
    w["element"] = optional_index(ground, v.witness->element);
    w["tried"] = subset_to_json(ground, v.witness->tried);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json audit_to_json(const GroundSet& ground, const AuditReport& report) {
  Json out;
  out["verdict"] = report.all_hold() ? "holds" : "fails";
  out["axioms"] = Json::array();
  for (const auto& v : report.verdicts) {
    out["axioms"].push_back(verdict_to_json(ground, v));
  }
  out["implication_violations"] = Json::array();
  for (const auto& violation : report.violations) {
    Json item;
    item["premise"] = std::string(axiom_name(violation.implication.premise));
    item["conclusion"] =
        std::string(axiom_name(violation.implication.conclusion));
    item["conclusion_witness"] =
        verdict_to_json(ground, violation.conclusion)["witness"];
    out["implication_violations"].push_back(std::move(item));
  }
  return out;
}

Json closure_to_json(const GroundSet& ground, const ClosureReport& report) {
  Json out;
  out["base"] = subset_to_json(ground, report.base);
  out["closed_sets"] = subsets_to_json(ground, report.closed_sets);
  out["unique"] = report.unique;
  if (const auto* classes =
          std::get_if<std::vector<ElementSet>>(&report.partition)) {
    out["partition_classes"] = subsets_to_json(ground, *classes);
    out["fact1"] = "holds";
  } else {
    const auto& v = std::get<PartitionViolation>(report.partition);
    out["partition_classes"] = nullptr;
    Json pair;
    pair["first"] = subset_to_json(ground, v.first);
    pair["second"] = subset_to_json(ground, v.second);
    out["fact1"] = Json{{"violation", std::move(pair)}};
  }
  return out;
}

Json specific_closure_to_json(const GroundSet& ground,
                              const SpecificClosure& cl) {
  Json out;
  out["sets"] = subsets_to_json(ground, cl.sets);
  out["ambiguous"] = cl.ambiguous;
  return out;
}

Json growth_to_json(const GroundSet& ground, const GrowthTrace& trace) {
  Json out;
  out["start"] = subset_to_json(ground, trace.start);
  out["steps"] = Json::array();
  for (const auto& step : trace.steps) {
    Json item;
    item["added"] = element_to_json(ground, step.added);
    item["instance"] = subset_to_json(ground, step.instance);
    item["closure"] = subset_to_json(ground, step.closure);
    out["steps"].push_back(std::move(item));
  }
  out["terminal"] = optional_index(ground, trace.terminal);
  out["exhausted"] = trace.exhausted();
  return out;
}

Json trace_to_json(const GroundSet& ground, const RunTrace& trace) {
  Json out;
  out["verdict"] = std::string(outcome_name(trace.outcome));
  out["output"] = subset_to_json(ground, trace.output);
  out["iterations"] = Json::array();
  for (const auto& it : trace.iterations) {
    Json item;
    item["set"] = subset_to_json(ground, it.current);
    item["chosen"] = optional_index(ground, it.chosen);
    item["candidates"] = it.candidates;
    out["iterations"].push_back(std::move(item));
  }
  out["states_explored"] = trace.states_explored;
  return out;
}

Json chain_to_json(const GroundSet& ground, const Chain& chain) {
  return subsets_to_json(ground, chain.links);
}

Json class_verdict_to_json(const ClassVerdict& v) {
  Json out;
  out["corpus_size"] = v.corpus_size;
  Json flags;
  Json failures;
  for (Axiom a : kAllAxioms) {
    const auto k = static_cast<std::size_t>(a);
    flags[std::string(axiom_name(a))] = v.flags[k];
    failures[std::string(axiom_name(a))] =
        v.first_failure[k] ? Json(*v.first_failure[k]) : Json(nullptr);
  }
  out["flags"] = std::move(flags);
  out["first_failure"] = std::move(failures);
  Json labels;
  labels["matroid"] = v.labels.matroid;
  labels["in_P"] = v.labels.in_p;
  labels["P_complete"] = v.labels.p_complete;
  labels["in_NP"] = v.labels.in_np;
  labels["NP_complete"] = Json{{"statement", v.labels.np_complete_statement},
                               {"proof", v.labels.np_complete_proof}};
  out["labels"] = std::move(labels);
  out["reading_note"] = v.reading_note;
  return out;
}

}  // namespace gsp::io
