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

#include "cgeom/cli.hpp"

#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "cgeom/closure.hpp"
#include "cgeom/dot.hpp"
#include "cgeom/error.hpp"
#include "cgeom/explorer.hpp"
#include "cgeom/generators.hpp"
#include "cgeom/geometry.hpp"
#include "cgeom/io.hpp"
#include "cgeom/lattice.hpp"

namespace cgeom {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json input_document(const RunConfig& config) {
  if (config.input.empty()) throw Error(ErrorCode::kParseError, "missing --input");
  return read_json_file(config.input);
}

// Lattice from a lattice file, or the closed-set lattice of a closure file.
FiniteLattice input_lattice(const Json& doc) {
  if (is_closure_document(doc)) return cld_lattice(closure_from_json(doc)).lattice;
  return lattice_from_json(doc);
}

std::vector<ElementId> report_witness(const FiniteLattice& lattice) {
  if (auto sd = is_sd_join(lattice); !sd) return {sd.witness->w, sd.witness->x, sd.witness->y, sd.witness->z};
  if (auto lsm = is_lower_semimodular(lattice); !lsm) return {lsm.witness->x, lsm.witness->y, lsm.witness->z};
  return {};
}

RunResult run_check(const RunConfig& config) {
  const Json doc = input_document(config);
  const FiniteLattice lattice = input_lattice(doc);
  if (config.format == OutputFormat::kDot) {
    return {0, emit_dot(lattice, {true, {}, report_witness(lattice), "lattice"}), ""};
  }
  const PropertyReport report = scs_geom_report(lattice);
  const auto star = is_sd_join_star(lattice, config.max_family);
  if (config.format == OutputFormat::kText) {
    std::ostringstream out;
    out << "elements: " << lattice.size() << "\n";
    for (std::size_t i = 0; i < kConditionCount; ++i) {
      out << "condition " << i + 1 << ": " << (report.flags[i] ? "true" : "false");
      if (report.witnesses[i]) out << "  (" << report.witnesses[i]->text << ")";
      out << "\n";
    }
    out << "agreement: " << (report.agreement ? "true" : "false") << "\n";
    out << "atomistic: " << (report.atomistic ? "true" : "false") << "\n";
    out << "distributive: " << (report.distributive ? "true" : "false") << "\n";
    return {0, out.str(), ""};
  }
  Json out{{"input", config.input}};
  if (is_closure_document(doc)) {
    const ClosureSystem cs = closure_from_json(doc);
    out["closure"] = convex_geometry_to_json(cs, is_convex_geometry(cs), cover_singleton(cs));
  }
  out["report"] = report_to_json(lattice, report);
  out["sd_join_star"] = Json{{"bound", config.max_family}, {"holds", star.holds()}};
  return {0, dump(out), ""};
}

RunResult run_decompose(const RunConfig& config) {
  const FiniteLattice lattice = input_lattice(input_document(config));
  const std::uint64_t seed = config.seed.value_or(kDefaultSeed);
  Json all = Json::array();
  std::ostringstream text;
  for (ElementId w = 0; w < lattice.size(); ++w) {
    const DecompositionOutcome outcome = canonical_join_decomposition(lattice, w, config.samples, seed);
    all.push_back(decomposition_to_json(lattice, w, outcome));
    text << lattice.name(w) << ": ";
    if (!outcome.decomposition) {
      text << "none\n";
      continue;
    }
    const auto parts = outcome.decomposition->part_set();
    if (parts.empty()) text << "empty join";
    for (std::size_t i = 0; i < parts.size(); ++i) text << (i ? " v " : "") << lattice.name(parts[i]);
    text << "\n";
  }
  if (config.format == OutputFormat::kText) return {0, text.str(), ""};
  if (config.format == OutputFormat::kDot) return {0, emit_dot(lattice), ""};
  return {0, dump(Json{{"input", config.input}, {"decompositions", all}}), ""};
}

struct Generated {
  std::optional<ClosureSystem> closure;
  std::optional<FiniteLattice> lattice;
};

using GeneratorFn = std::function<Generated(const RunConfig&)>;

const std::map<std::string, GeneratorFn>& generators() {
  static const std::map<std::string, GeneratorFn> table = {
      {"co-poset", [](const RunConfig& c) { return Generated{co_poset(poset_from_json(input_document(c))), {}}; }},
      {"sub-meet", [](const RunConfig& c) { return Generated{sub_meet(semilattice_from_json(input_document(c))), {}}; }},
      {"convex-sub-meet",
       [](const RunConfig& c) { return Generated{convex_sub_meet(semilattice_from_json(input_document(c))), {}}; }},
      {"suborders", [](const RunConfig& c) { return Generated{suborders(poset_from_json(input_document(c))), {}}; }},
      {"standard-rep",
       [](const RunConfig& c) { return Generated{standard_representation(lattice_from_json(input_document(c))), {}}; }},
      {"cld", [](const RunConfig& c) { return Generated{{}, cld_lattice(closure_from_json(input_document(c))).lattice}; }},
      {"filter-lattice",
       [](const RunConfig& c) { return Generated{{}, filter_lattice(lattice_from_json(input_document(c))).lattice}; }},
      {"chain", [](const RunConfig& c) { return Generated{{}, construct::chain(c.n)}; }},
      {"antichain", [](const RunConfig& c) { return Generated{{}, construct::antichain_with_bounds(c.n)}; }},
      {"boolean", [](const RunConfig& c) { return Generated{{}, construct::boolean(c.n)}; }},
      {"m3", [](const RunConfig&) { return Generated{{}, construct::m3()}; }},
      {"n5", [](const RunConfig&) { return Generated{{}, construct::n5()}; }},
      {"doubled-atom", [](const RunConfig& c) { return Generated{{}, construct::chain_dual_times_two_doubled_atom(c.n)}; }},
  };
  return table;
}

RunResult run_generate(const RunConfig& config) {
  const auto& table = generators();
  auto it = table.find(config.generator);
  if (it == table.end()) throw Error(ErrorCode::kParseError, "unknown generator '" + config.generator + "'");
  const Generated g = it->second(config);
  if (config.format == OutputFormat::kDot) {
    return {0, emit_dot(g.lattice ? *g.lattice : cld_lattice(*g.closure).lattice, {true, {}, {}, config.generator}), ""};
  }
  return {0, dump(g.lattice ? lattice_to_json(*g.lattice) : closure_to_json(*g.closure)), ""};
}

RunResult run_explore(const RunConfig& config) {
  const auto lattice = named_instance(config.instance);
  const Window window = explore(*lattice, config.depth, config.budget, config.roots);
  if (config.property.empty()) {
    if (config.format == OutputFormat::kDot) return {0, emit_dot(*lattice, window), ""};
    return {0, dump(window_to_json(*lattice, window)), ""};
  }
  const Verdict verdict = window_check(*lattice, window, parse_property(config.property));
  if (config.format == OutputFormat::kDot) return {0, emit_dot(*lattice, window, verdict.witness), ""};
  if (config.format == OutputFormat::kText) {
    return {0, verdict.property + ": " + status_name(verdict.status) + (verdict.note.empty() ? "" : " (" + verdict.note + ")") + "\n", ""};
  }
  Json out = verdict_to_json(verdict);
  out["instance"] = lattice->name();
  out["window_size"] = window.nodes.size();
  return {0, dump(out), ""};
}

RunResult run_corpus(const RunConfig& config) {
  std::vector<CorpusItem> items;
  const std::string& kind = config.generator;
  if (kind == "moore") {
    items = corpus({CorpusKind::kAllMoore, config.n, 0, 0, config.allow_large});
  } else if (kind == "posets") {
    items = corpus({CorpusKind::kAllPosets, config.n, 0, 0, false});
  } else if (kind == "semilattices") {
    items = corpus({CorpusKind::kAllMeetSemilattices, config.n, 0, 0, false});
  } else if (kind == "random" || kind == "standard") {
    if (!config.seed) throw Error(ErrorCode::kPreconditionFailed, "random corpora need --seed");
    items = kind == "random" ? corpus({CorpusKind::kRandomPosets, config.n, config.count, *config.seed, false})
                             : standard_corpus(*config.seed, config.count, config.n);
  } else {
    throw Error(ErrorCode::kParseError, "unknown corpus kind '" + kind + "'");
  }
  std::string out;
  std::size_t convex = 0;
  Json disagreements = Json::array();
  for (const CorpusItem& item : items) {
    const ClosureLattice cld = cld_lattice(item.system);
    const PropertyReport report = scs_geom_report(cld.lattice);
    const bool cg = is_convex_geometry(item.system).convex;
    convex += cg ? 1 : 0;
    if (!report.agreement) disagreements.push_back(item.id);
    Json line{{"id", item.id},
              {"ground_size", item.system.ground_size()},
              {"closed_sets", cld.closed.size()},
              {"convex_geometry", cg},
              {"atomistic", report.atomistic},
              {"conditions", report.flags},
              {"agreement", report.agreement}};
    out += line.dump() + "\n";
  }
  Json summary{{"instances", items.size()},
               {"convex_geometries", convex},
               {"agreement", disagreements.empty()},
               {"disagreements", disagreements}};
  out += Json{{"summary", summary}}.dump() + "\n";
  return {0, out, ""};
}

}  // namespace

std::vector<std::string> generator_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : generators()) out.push_back(name);
  return out;
}

RunResult run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::kCheck: return run_check(config);
      case Command::kDecompose: return run_decompose(config);
      case Command::kGenerate: return run_generate(config);
      case Command::kExplore: return run_explore(config);
      case Command::kCorpus: return run_corpus(config);
    }
  } catch (const Error& e) {
    return {2, "", e.what()};
  } catch (const std::exception& e) {
    return {3, "", std::string("internal error: ") + e.what()};
  }
  return {3, "", "unknown command"};
}

}  // namespace cgeom
