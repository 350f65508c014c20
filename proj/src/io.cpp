// Copyright 2026 The Authors.
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

#include "cgeom/io.hpp"

#include <fstream>
#include <vector>

#include "cgeom/error.hpp"

namespace cgeom {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

std::vector<IdPair> read_pairs(const Json& arr, const char* key) {
  if (!arr.is_array()) parse_error(std::string("'") + key + "' must be an array of pairs");
  std::vector<IdPair> out;
  for (const Json& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
      parse_error(std::string("bad pair in '") + key + "': " + p.dump());
    }
    out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return out;
}

std::vector<std::size_t> read_indices(const Json& arr, std::size_t bound, const std::string& where) {
  if (!arr.is_array()) parse_error(where + " must be an array of indices");
  std::vector<std::size_t> out;
  for (const Json& v : arr) {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= bound) parse_error("bad index in " + where + ": " + v.dump());
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

struct OrderInput {
  std::vector<std::string> names;
  std::vector<IdPair> pairs;
  RelationMode mode = RelationMode::kCovers;
};

OrderInput read_order(const Json& doc) {
  if (!doc.is_object()) parse_error("expected a JSON object");
  OrderInput in;
  const bool has_covers = doc.contains("covers");
  const bool has_leq = doc.contains("leq");
  if (has_covers == has_leq) parse_error("give exactly one of 'covers' and 'leq'");
  in.mode = has_covers ? RelationMode::kCovers : RelationMode::kOrder;
  in.pairs = read_pairs(has_covers ? doc["covers"] : doc["leq"], has_covers ? "covers" : "leq");
  std::size_t n = 0;
  if (doc.contains("elements")) {
    if (!doc["elements"].is_array()) parse_error("'elements' must be an array");
    for (const Json& e : doc["elements"]) {
      in.names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    n = in.names.size();
  } else {
    for (const auto& [a, b] : in.pairs) n = std::max({n, a + 1, b + 1});
    if (doc.contains("size")) n = std::max(n, doc["size"].get<std::size_t>());
    for (std::size_t i = 0; i < n; ++i) in.names.push_back(std::to_string(i));
  }
  for (const auto& [a, b] : in.pairs) {
    if (a >= n || b >= n) parse_error("pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside the elements");
  }
  return in;
}

Json names_of(const FiniteLattice& lattice, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (ElementId id : ids) out.push_back(lattice.name(id));
  return out;
}

Json payload(const FiniteLattice& lattice, const std::optional<WitnessPayload>& w) {
  if (!w) return nullptr;
  return Json{{"kind", w->kind}, {"elements", names_of(lattice, w->elements)}, {"text", w->text}};
}

Json set_json(const ClosureSystem& cs, const Bitset& b) {
  Json out = Json::array();
  for (std::size_t i : members(b)) out.push_back(cs.ground()[i]);
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

FiniteLattice lattice_from_json(const Json& doc) {
  OrderInput in = read_order(doc);
  return FiniteLattice::build(std::move(in.names), in.pairs, in.mode);
}

Json lattice_to_json(const FiniteLattice& lattice) {
  Json covers = Json::array();
  for (const auto& [a, b] : lattice.cover_pairs()) covers.push_back({a, b});
  return Json{{"elements", lattice.names()}, {"covers", covers}};
}

FinitePoset poset_from_json(const Json& doc) {
  OrderInput in = read_order(doc);
  if (in.mode == RelationMode::kOrder) return FinitePoset::build(std::move(in.names), in.pairs);
  for (const auto& [a, b] : in.pairs) {
    if (a == b) throw Error(ErrorCode::kNotAPartialOrder, "self-loop at " + in.names[a]);
  }
  return FinitePoset::build(std::move(in.names), in.pairs);
}

Json poset_to_json(const FinitePoset& poset) {
  Json covers = Json::array();
  for (const auto& [a, b] : poset.cover_pairs()) covers.push_back({a, b});
  return Json{{"elements", poset.names()}, {"covers", covers}};
}

MeetSemilattice semilattice_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("meet_table")) {
    const Json& rows = doc["meet_table"];
    if (!rows.is_array()) parse_error("'meet_table' must be a square array");
    const std::size_t n = rows.size();
    std::vector<std::vector<ElementId>> table;
    for (const Json& row : rows) {
      if (!row.is_array() || row.size() != n) parse_error("'meet_table' must be square");
      table.push_back(read_indices(row, n, "meet_table"));
    }
    std::vector<std::string> names;
    if (doc.contains("elements")) {
      for (const Json& e : doc["elements"]) names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      if (names.size() != n) parse_error("'elements' and 'meet_table' differ in size");
    } else {
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    }
    return MeetSemilattice::from_table(std::move(names), std::move(table));
  }
  return MeetSemilattice::from_poset(poset_from_json(doc));
}

bool is_closure_document(const Json& doc) { return doc.is_object() && doc.contains("ground"); }

ClosureSystem closure_from_json(const Json& doc) {
  if (!is_closure_document(doc) || !doc["ground"].is_array()) parse_error("closure file needs a 'ground' array");
  std::vector<std::string> ground;
  for (const Json& g : doc["ground"]) ground.push_back(g.is_string() ? g.get<std::string>() : g.dump());
  const std::size_t n = ground.size();
  if (doc.contains("closed")) {
    if (!doc["closed"].is_array()) parse_error("'closed' must be an array of index lists");
    std::vector<Bitset> family;
    for (const Json& set : doc["closed"]) {
      Bitset b(n);
      for (std::size_t i : read_indices(set, n, "closed")) b.set(i);
      family.push_back(std::move(b));
    }
    return ClosureSystem::from_family(std::move(ground), std::move(family));
  }
  if (doc.contains("implications")) {
    std::vector<Implication> base;
    for (const Json& rule : doc["implications"]) {
      if (!rule.is_object() || !rule.contains("if") || !rule.contains("then")) {
        parse_error("implication needs 'if' and 'then': " + rule.dump());
      }
      Bitset premise(n);
      for (std::size_t i : read_indices(rule["if"], n, "if")) premise.set(i);
      const Json& then = rule["then"];
      if (!then.is_number_unsigned() || then.get<std::size_t>() >= n) parse_error("bad 'then': " + then.dump());
      base.push_back({std::move(premise), then.get<std::size_t>()});
    }
    return ClosureSystem::from_implications(std::move(ground), std::move(base));
  }
  parse_error("closure file needs 'closed' or 'implications'");
}

Json closure_to_json(const ClosureSystem& cs) {
  Json closed = Json::array();
  for (const Bitset& b : cs.closed_sets()) closed.push_back(members(b));
  return Json{{"ground", cs.ground()}, {"closed", closed}};
}

Json report_to_json(const FiniteLattice& lattice, const PropertyReport& report) {
  Json flags = Json::array();
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < kConditionCount; ++i) {
    flags.push_back(report.flags[i]);
    witnesses.push_back(payload(lattice, report.witnesses[i]));
  }
  return Json{{"size", lattice.size()},
              {"join_irreducibles", lattice.join_irreducibles().size()},
              {"conditions", flags},
              {"witnesses", witnesses},
              {"agreement", report.agreement},
              {"atomistic", report.atomistic},
              {"atomistic_witness", payload(lattice, report.atomistic_witness)},
              {"distributive", report.distributive},
              {"distributive_witness", payload(lattice, report.distributive_witness)},
              {"sd_join", report.sd_join},
              {"lower_semimodular", report.lower_semimodular},
              {"strongly_coatomic", report.strongly_coatomic},
              {"spatial", report.spatial},
              {"atomistic_sd_forces_all", report.atomistic_sd_forces_all}};
}

Json convex_geometry_to_json(const ClosureSystem& cs, const ConvexGeometryVerdict& verdict,
                             const CheckResult<CoverWitness>& covers) {
  Json out{{"convex_geometry", verdict.convex},
           {"zero_closure", verdict.zero_closure},
           {"anti_exchange", verdict.anti_exchange},
           {"reason", verdict.reason},
           {"cover_singleton", covers.holds()}};
  if (verdict.aep_witness) {
    const AepWitness& w = *verdict.aep_witness;
    out["aep_witness"] = Json{{"closed", set_json(cs, w.closed)}, {"x", cs.ground()[w.x]}, {"y", cs.ground()[w.y]}};
  } else {
    out["aep_witness"] = nullptr;
  }
  if (covers.witness) {
    out["cover_witness"] = Json{{"lower", set_json(cs, covers.witness->lower)}, {"upper", set_json(cs, covers.witness->upper)}};
  } else {
    out["cover_witness"] = nullptr;
  }
  return out;
}

Json decomposition_to_json(const FiniteLattice& lattice, ElementId w, const DecompositionOutcome& outcome) {
  Json out{{"element", lattice.name(w)}};
  if (outcome.decomposition) {
    Json parts = Json::array();
    for (const auto& [c, k] : outcome.decomposition->parts) {
      parts.push_back(Json{{"cover", lattice.name(c)}, {"join_irreducible", lattice.name(k)}});
    }
    out["decomposition"] = names_of(lattice, outcome.decomposition->part_set());
    out["parts"] = parts;
  } else {
    out["decomposition"] = "none";
    out["offending_cover"] = outcome.offending_cover ? Json(lattice.name(*outcome.offending_cover)) : Json(nullptr);
    out["separators"] = names_of(lattice, outcome.separators);
    out["reason"] = outcome.reason;
  }
  return out;
}

Json verdict_to_json(const Verdict& verdict) {
  Json out{{"property", verdict.property},
           {"status", status_name(verdict.status)},
           {"window", Json{{"depth", verdict.depth}, {"budget", verdict.budget}}}};
  out["witness"] = verdict.status == VerdictStatus::kFailsWithWitness ? Json(verdict.witness) : Json(nullptr);
  out["note"] = verdict.note;
  return out;
}

Json window_to_json(const LazyLattice& lattice, const Window& window) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < window.nodes.size(); ++i) {
    const WindowNode& n = window.nodes[i];
    nodes.push_back(Json{{"element", lattice.label(n.element)},
                         {"level", n.level},
                         {"expanded", n.expanded},
                         {"truncated", n.oracle.truncated},
                         {"frontier", window.is_frontier(i)}});
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : window.cover_edges()) {
    edges.push_back({lattice.label(window.nodes[lo].element), lattice.label(window.nodes[hi].element)});
  }
  return Json{{"instance", lattice.name()}, {"depth", window.depth}, {"budget", window.budget}, {"nodes", nodes}, {"covers", edges}};
}

}  // namespace cgeom
