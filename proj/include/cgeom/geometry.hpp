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

#ifndef CGEOM_GEOMETRY_HPP
#define CGEOM_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cgeom/check.hpp"
#include "cgeom/lattice.hpp"

namespace cgeom {

// All searches below run in element-id order and stop at the first
// counterexample, so witnesses are reproducible.

struct Triple {
  ElementId x = 0;
  ElementId y = 0;
  ElementId z = 0;
  bool operator==(const Triple&) const = default;
};

/// x v y = x v z = w but x v (y ^ z) != w.
struct SdJoinWitness {
  ElementId w = 0;
  ElementId x = 0;
  ElementId y = 0;
  ElementId z = 0;
  bool operator==(const SdJoinWitness&) const = default;
};

struct SdJoinStarWitness {
  ElementId w = 0;
  std::vector<ElementId> y;
  std::vector<ElementId> z;
};

CheckResult<SdJoinWitness> is_sd_join(const FiniteLattice& lattice);

/// Bounded SD-join-star: every pair of antichains Y, Z with at most
/// `max_family` members and equal joins w must have join(y ^ z) = w.
/// Throws Error{kBoundTooSmall} when max_family < 2.
CheckResult<SdJoinStarWitness> is_sd_join_star(const FiniteLattice& lattice, std::size_t max_family = 3);

/// (y_k, z_k) with y_0 = y, z_0 = z, y_{k+1} = y ^ (x v z_k), z_{k+1} = z ^ (x v y_k).
std::pair<ElementId, ElementId> sd_join_n_terms(const FiniteLattice& lattice, ElementId x, ElementId y, ElementId z,
                                                std::size_t k);

/// y_n <= x v (y ^ z) for every triple. Throws Error{kPreconditionFailed} for n = 0.
CheckResult<Triple> satisfies_sd_join_n(const FiniteLattice& lattice, std::size_t n);

/// Least n <= cap with satisfies_sd_join_n, or nullopt ("no n up to cap").
std::optional<std::size_t> sd_join_n_depth(const FiniteLattice& lattice, std::size_t cap = 8);

/// Witness (a, b, c): a < b is a cover and a ^ c is neither b ^ c nor covered by it.
CheckResult<Triple> is_lower_semimodular(const FiniteLattice& lattice);

/// Exhaustive x ^ (y v z) = (x ^ y) v (x ^ z).
CheckResult<Triple> is_distributive(const FiniteLattice& lattice);

/// Meet of the lower covers of x; x itself when x has none.
ElementId mu(const FiniteLattice& lattice, ElementId x);

/// Witness: the first x whose interval [mu(x), x] is not distributive.
CheckResult<ElementId> is_locally_distributive(const FiniteLattice& lattice);

/// Witness: the first nonzero element that is not the join of the atoms below it.
CheckResult<ElementId> is_atomistic(const FiniteLattice& lattice);

/// Minimal elements of { p in Ji(L) : p <= w, p not <= c }.
std::vector<ElementId> minimal_ji_separators(const FiniteLattice& lattice, ElementId w, ElementId c);

struct CanonicalJoinDecomposition {
  ElementId target = 0;
  /// (lower cover c, k_c), ascending in c.
  std::vector<IdPair> parts;
  /// (c, d): the join of every part except k_c lies below the lower cover d.
  std::vector<IdPair> certificates;

  /// Distinct parts, ascending.
  std::vector<ElementId> part_set() const;
};

struct DecompositionOutcome {
  std::optional<CanonicalJoinDecomposition> decomposition;
  /// Lower cover whose minimal separator set is not a singleton.
  std::optional<ElementId> offending_cover;
  std::vector<ElementId> separators;
  std::string reason;
};

/// Builds w = join of k_c over lower covers c, checks irredundancy and
/// refinement against `samples` random join representations of w.
DecompositionOutcome canonical_join_decomposition(const FiniteLattice& lattice, ElementId w, std::size_t samples = 16,
                                                  std::uint64_t seed = 0x5eed);

/// Random B with join(B) = w drawn from the down-set of w.
std::vector<ElementId> random_join_representation(const FiniteLattice& lattice, ElementId w, std::mt19937_64& rng);

struct UniqueJi {
  std::optional<ElementId> j;
  /// Every join irreducible below w and not below c.
  std::vector<ElementId> all;
  /// The minimal ones among `all`.
  std::vector<ElementId> minimal;
};

/// Throws Error{kNotACover} unless c is a lower cover of w.
UniqueJi unique_min_ji(const FiniteLattice& lattice, ElementId w, ElementId c);

struct ExtremePointJoin {
  std::vector<ElementId> extreme;
  bool joins_to_w = false;
};

ExtremePointJoin extreme_point_join(const FiniteLattice& lattice, ElementId w);

/// Irredundant join representations of w by join irreducibles, in lectic
/// order over Ji(w). Stops after `limit` results.
std::vector<std::vector<ElementId>> irredundant_ji_decompositions(const FiniteLattice& lattice, ElementId w,
                                                                  std::size_t limit = SIZE_MAX);

/// Failure evidence for one report flag.
struct WitnessPayload {
  std::string kind;
  std::vector<ElementId> elements;
  std::string text;
};

inline constexpr std::size_t kConditionCount = 7;

/// Verdicts for the seven equivalent characterizations plus side flags.
///
/// Index i of `flags` holds condition i+1:
///   1 anti-exchange of the standard representation,
///   2 singleton cover differences,
///   3 SD-join and lower semimodular,
///   4 every w is the join of Ex(w),
///   5 unique irredundant JI decomposition, canonical,
///   6 unique join irreducible per cover,
///   7 locally distributive.
struct PropertyReport {
  std::array<bool, kConditionCount> flags{};
  std::array<std::optional<WitnessPayload>, kConditionCount> witnesses;
  bool atomistic = false;
  bool distributive = false;
  bool sd_join = false;
  bool lower_semimodular = false;
  // Finite lattices are strongly coatomic and spatial.
  bool strongly_coatomic = true;
  bool spatial = true;
  /// All seven flags equal.
  bool agreement = false;
  /// atomistic and SD-join imply every flag.
  bool atomistic_sd_forces_all = false;
  std::optional<WitnessPayload> atomistic_witness;
  std::optional<WitnessPayload> distributive_witness;
};

PropertyReport scs_geom_report(const FiniteLattice& lattice);

}  // namespace cgeom

#endif  // CGEOM_GEOMETRY_HPP
