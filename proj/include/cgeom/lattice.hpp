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

#ifndef CGEOM_LATTICE_HPP
#define CGEOM_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgeom/bitset.hpp"

namespace cgeom {

using ElementId = std::size_t;
using IdPair = std::pair<ElementId, ElementId>;

enum class RelationMode { kOrder, kCovers };
enum class CoverDirection { kLower, kUpper };

/// Explicit finite lattice on dense ids 0..n-1.
///
/// The order is kept as up-set and down-set rows (row a of `up` holds every b
/// with a <= b) next to the cover lists. Meets and joins are tabulated at build
/// time when the lattice has at most kTableLimit elements. Instances are
/// immutable once built, so concurrent reads need no synchronization.
class FiniteLattice {
 public:
  static constexpr std::size_t kTableLimit = 512;

  /// Validates `relation` as an order (mode kOrder, reflexive-transitive
  /// closure taken) or as a cover list (mode kCovers) and checks the lattice
  /// axioms. Throws Error{kNotAPartialOrder} or Error{kNotALattice}.
  static FiniteLattice build(std::vector<std::string> names, std::span<const IdPair> relation,
                             RelationMode mode);

  /// Fast path for constructors that already hold a reflexive order as up-set
  /// rows. Transitivity, antisymmetry and the lattice axioms are still checked.
  static FiniteLattice from_up_sets(std::vector<std::string> names, std::vector<Bitset> up);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ElementId a) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view name) const;

  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  bool leq(ElementId a, ElementId b) const;
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  ElementId meet(ElementId a, ElementId b) const;
  ElementId join(ElementId a, ElementId b) const;
  /// meet_set of the empty set is top.
  ElementId meet_set(std::span<const ElementId> ids) const;
  /// join_set of the empty set is bottom.
  ElementId join_set(std::span<const ElementId> ids) const;
  ElementId join_set(const Bitset& ids) const;

  const Bitset& up_set(ElementId a) const;
  const Bitset& down_set(ElementId a) const;

  const std::vector<ElementId>& lower_covers(ElementId a) const;
  const std::vector<ElementId>& upper_covers(ElementId a) const;
  bool covers(ElementId lower, ElementId upper) const;
  /// All cover pairs (lower, upper), ordered by lower id then upper id.
  std::vector<IdPair> cover_pairs() const;

  /// Nonzero join irreducibles, ascending; each has exactly one lower cover.
  const std::vector<ElementId>& join_irreducibles() const noexcept { return ji_; }
  bool is_join_irreducible(ElementId a) const;
  /// The unique lower cover j_* of a join irreducible j.
  std::optional<ElementId> ji_lower_cover(ElementId a) const;
  std::vector<ElementId> atoms() const;

  void check(ElementId a) const;

 private:
  FiniteLattice() = default;
  void finish();
  ElementId compute_join(ElementId a, ElementId b) const;
  ElementId compute_meet(ElementId a, ElementId b) const;

  std::vector<std::string> names_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::size_t> up_count_;
  std::vector<std::size_t> down_count_;
  std::vector<std::vector<ElementId>> lower_;
  std::vector<std::vector<ElementId>> upper_;
  std::vector<ElementId> ji_;
  std::vector<std::uint32_t> join_table_;
  std::vector<std::uint32_t> meet_table_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

enum class LatticeOp { kLeq, kMeet, kJoin, kMeetSet, kJoinSet };

/// Single entry point over the order algebra; kLeq answers 0/1.
std::size_t lattice_algebra(const FiniteLattice& lattice, LatticeOp op, std::span<const ElementId> args);

std::vector<ElementId> covers_of(const FiniteLattice& lattice, ElementId a, CoverDirection direction);

/// Ji(a): join irreducibles below a, ascending.
std::vector<ElementId> ji_below(const FiniteLattice& lattice, ElementId a);

/// A refines B: each member of A mapped to a member of B above it.
struct RefinementWitness {
  std::vector<IdPair> pairs;
};

/// Returns a witness iff every member of `a` lies below some member of `b`.
/// The first (smallest id) dominating member of `b` is chosen.
std::optional<RefinementWitness> refines(const FiniteLattice& lattice, std::span<const ElementId> a,
                                         std::span<const ElementId> b);

namespace construct {

FiniteLattice chain(std::size_t n);
FiniteLattice antichain_with_bounds(std::size_t n);
FiniteLattice boolean(std::size_t n);
FiniteLattice m3();
FiniteLattice n5();
FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second);
FiniteLattice dual(const FiniteLattice& lattice);
/// Throws Error{kEmptyInterval} when a is not below b.
FiniteLattice interval(const FiniteLattice& lattice, ElementId a, ElementId b);
/// Finite analogue of the dual-chain-times-two lattice with its atom doubled.
/// Elements (k,e) for depth k in 0..n-1 (0 is the top of the chain) and e in
/// {0,1}; the atom (n-1,1) is replaced by a two-element chain t_lo < t_hi.
FiniteLattice chain_dual_times_two_doubled_atom(std::size_t n);

}  // namespace construct

/// Checks that `map` (source id -> target id) is an order isomorphism.
bool is_order_isomorphism(const FiniteLattice& from, const FiniteLattice& to, std::span<const ElementId> map);

/// Backtracking isomorphism search; returns the map from `first` to `second`.
std::optional<std::vector<ElementId>> find_isomorphism(const FiniteLattice& first, const FiniteLattice& second);

}  // namespace cgeom

#endif  // CGEOM_LATTICE_HPP
