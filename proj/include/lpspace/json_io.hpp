#ifndef LPSPACE_JSON_IO_HPP
#define LPSPACE_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lpspace/core.hpp"
#include "lpspace/blocks.hpp"
#include "lpspace/norms.hpp"
#include "lpspace/stepfn.hpp"
#include "lpspace/tensor.hpp"
#include "lpspace/treeindex.hpp"
#include "lpspace/weights.hpp"

namespace lpspace {

using json = nlohmann::json;

// WeightSequence {"p": .., "weights": [..],
//                 "tail": "none"|"constant"|{"power_law": e}|"block_harmonic"}
inline WeightSequence weights_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("weights"))
    throw DomainError("weights json: object with p and weights required");
  Tail tail;
  if (j.contains("tail")) {
    const json& t = j.at("tail");
    if (t.is_string()) {
      const std::string s = t.get<std::string>();
      if (s == "none")
        tail.kind = TailKind::none;
      else if (s == "constant")
        tail.kind = TailKind::constant;
      else if (s == "block_harmonic")
        tail.kind = TailKind::block_harmonic;
      else
        throw DomainError("weights json: unknown tail tag '" + s + "'");
    } else if (t.is_object() && t.contains("power_law")) {
      tail.kind = TailKind::power_law;
      tail.exponent = t.at("power_law").get<double>();
    } else {
      throw DomainError("weights json: malformed tail tag");
    }
  }
  return WeightSequence(j.at("p").get<double>(), j.at("weights").get<std::vector<double>>(), tail);
}

inline json weights_to_json(const WeightSequence& w) {
  json j{{"p", w.p()}, {"weights", w.weights()}};
  switch (w.tail().kind) {
    case TailKind::none: j["tail"] = "none"; break;
    case TailKind::constant: j["tail"] = "constant"; break;
    case TailKind::block_harmonic: j["tail"] = "block_harmonic"; break;
    case TailKind::power_law: j["tail"] = json{{"power_law", w.tail().exponent}}; break;
  }
  return j;
}

// CoefficientTensor {"shape": [..], "values": [..]} (row-major); a bare array
// is accepted as a rank-1 tensor.
inline CoefficientTensor tensor_from_json(const json& j) {
  if (j.is_array()) return CoefficientTensor::vector(j.get<std::vector<double>>());
  if (!j.is_object() || !j.contains("shape") || !j.contains("values"))
    throw DomainError("tensor json: object with shape and values required");
  return CoefficientTensor(j.at("shape").get<std::vector<std::size_t>>(),
                           j.at("values").get<std::vector<double>>());
}

inline json tensor_to_json(const CoefficientTensor& t) {
  return json{{"shape", t.shape()}, {"values", t.values()}};
}

// StepFunction {"coords": [{"probs": [..], "two_point"?: bool}],
//               "support": [..], "values": [..]}
inline StepFunction stepfn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coords") || !j.contains("support") || !j.contains("values"))
    throw DomainError("stepfn json: object with coords, support, values required");
  CoordinateSpace sp;
  for (const json& c : j.at("coords")) {
    Coordinate coord = Coordinate::interval(c.at("probs").get<std::vector<double>>());
    if (c.value("two_point", false)) coord.kind = Coordinate::Kind::two_point;
    sp.coords.push_back(std::move(coord));
  }
  return StepFunction(std::move(sp), j.at("support").get<std::vector<std::size_t>>(),
                      j.at("values").get<std::vector<double>>());
}

inline json stepfn_to_json(const StepFunction& f) {
  json coords = json::array();
  for (const Coordinate& c : f.space().coords) {
    json jc{{"probs", c.probs}};
    if (c.kind == Coordinate::Kind::two_point) jc["two_point"] = true;
    coords.push_back(std::move(jc));
  }
  return json{{"coords", std::move(coords)}, {"support", f.support()}, {"values", f.values()}};
}

// BlockPartition {"sets": [[..],[..]]}
inline BlockPartition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("sets"))
    throw DomainError("partition json: object with sets required");
  BlockPartition part;
  part.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
  return part;
}

inline json partition_to_json(const BlockPartition& part) { return json{{"sets", part.sets}}; }

// Relation JSON {"vertices": [..], "edges": [[x,y],..]}
inline FiniteRelation relation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw DomainError("relation json: object with vertices and edges required");
  FiniteRelation r;
  for (const json& v : j.at("vertices")) r.vertices.insert(v.get<std::uint64_t>());
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw DomainError("relation json: edge must be a pair");
    r.edges.insert({e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>()});
  }
  r.validate();
  return r;
}

inline json relation_to_json(const FiniteRelation& r) {
  json edges = json::array();
  for (const auto& [x, y] : r.edges) edges.push_back(json::array({x, y}));
  return json{{"vertices", r.vertices}, {"edges", std::move(edges)}};
}

// Tree JSON {"nodes": [..], "parent": {"child": parent, ..}}
inline CfreTree tree_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("parent"))
    throw DomainError("tree json: object with nodes and parent required");
  CfreTree t;
  for (const json& n : j.at("nodes")) t.nodes.insert(n.get<std::uint64_t>());
  for (const auto& [k, v] : j.at("parent").items())
    t.parent[std::stoull(k)] = v.get<std::uint64_t>();
  t.validate();
  return t;
}

inline json tree_to_json(const CfreTree& t) {
  json parent = json::object();
  for (const auto& [c, p] : t.parent) parent[std::to_string(c)] = p;
  json j{{"nodes", t.nodes}, {"parent", std::move(parent)}};
  if (t.truncated) j["truncation"] = json{{"depth", t.trunc_depth}, {"width", t.trunc_width}};
  return j;
}

// CNF JSON [[e1,c1],[e2,c2],..]
inline OrdinalCNF cnf_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("cnf json: array of [exponent, coefficient] pairs required");
  OrdinalCNF a;
  for (const json& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw DomainError("cnf json: each term must be a pair");
    a.terms.push_back({term[0].get<std::uint64_t>(), term[1].get<std::uint64_t>()});
  }
  a.validate();
  return a;
}

inline json cnf_to_json(const OrdinalCNF& a) {
  json j = json::array();
  for (const auto& [e, c] : a.terms) j.push_back(json::array({e, c}));
  return j;
}

inline json norm_report_to_json(const NormReport& r) {
  return json{{"value", r.value}, {"branch", r.branch}, {"components", r.components}};
}

}  // namespace lpspace

#endif  // LPSPACE_JSON_IO_HPP
