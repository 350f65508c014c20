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

#ifndef CGEOM_IO_HPP
#define CGEOM_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cgeom/closure.hpp"
#include "cgeom/explorer.hpp"
#include "cgeom/generators.hpp"
#include "cgeom/geometry.hpp"
#include "cgeom/lattice.hpp"

namespace cgeom {

using Json = nlohmann::ordered_json;

/// Throws Error{kParseError} on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);

/// {"elements": [...], "covers": [[i,j],...]} with i covered by j, or
/// {"leq": [[i,j],...]}. "elements" may be omitted; ids are positional.
FiniteLattice lattice_from_json(const Json& doc);
Json lattice_to_json(const FiniteLattice& lattice);

FinitePoset poset_from_json(const Json& doc);
Json poset_to_json(const FinitePoset& poset);

/// Lattice-format order or {"meet_table": [[...]]}.
MeetSemilattice semilattice_from_json(const Json& doc);

/// {"ground": [...], "closed": [[...]]} or {"ground": [...],
/// "implications": [{"if": [...], "then": i}]}.
ClosureSystem closure_from_json(const Json& doc);
/// Always written as the closed-set family.
Json closure_to_json(const ClosureSystem& cs);

bool is_closure_document(const Json& doc);

Json report_to_json(const FiniteLattice& lattice, const PropertyReport& report);
Json convex_geometry_to_json(const ClosureSystem& cs, const ConvexGeometryVerdict& verdict,
                             const CheckResult<CoverWitness>& covers);
Json decomposition_to_json(const FiniteLattice& lattice, ElementId w, const DecompositionOutcome& outcome);
Json verdict_to_json(const Verdict& verdict);
Json window_to_json(const LazyLattice& lattice, const Window& window);

}  // namespace cgeom

#endif  // CGEOM_IO_HPP
