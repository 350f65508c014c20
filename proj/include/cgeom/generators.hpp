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

#ifndef CGEOM_GENERATORS_HPP
#define CGEOM_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgeom/bitset.hpp"
#include "cgeom/closure.hpp"
#include "cgeom/lattice.hpp"

namespace cgeom {

/// Finite partial order on ids 0..n-1, stored as up-set rows.
class FinitePoset {
 public:
  /// Reflexive-transitive closure of `relation`; throws Error{kNotAPartialOrder}
  /// on a cycle.
  static FinitePoset build(std::vector<std::string> names, std::span<const IdPair> relation);
  static FinitePoset from_up_sets(std::vector<std::string> names, std::vector<Bitset> up);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  static FinitePoset of_lattice(const FiniteLattice& lattice);

  std::size_t size() const noexcept { return up_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool leq(ElementId a, ElementId b) const { return up_.at(a).test(b); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  const Bitset& up_set(ElementId a) const { return up_.at(a); }
  /// Strict cover pairs (a, b), ordered by a then b.
  std::vector<IdPair> cover_pairs() const;

 private:
  std::vector<std::string> names_;
  std::vector<Bitset> up_;
};

/// Finite meet semilattice given by its meet table; a <= b iff a ^ b = a.
class MeetSemilattice {
 public:
  /// Throws Error{kParseError} unless the table is idempotent, commutative and
  /// associative.
  static MeetSemilattice from_table(std::vector<std::string> names, std::vector<std::vector<ElementId>> table);
  /// Throws Error{kPreconditionFailed} when some pair has no meet.
  static MeetSemilattice from_poset(const FinitePoset& poset);

  std::size_t size() const noexcept { return table_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  ElementId meet(ElementId a, ElementId b) const { return table_.at(a).at(b); }
  const std::vector<std::vector<ElementId>>& table() const noexcept { return table_; }
  FinitePoset order() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<ElementId>> table_;
};

/// Co(P): convex subsets, gamma(A) = { x : a1 <= x <= a2 for some a1, a2 in A }.
ClosureSystem co_poset(const FinitePoset& poset);
/// Sub(S): meet-closed subsets, the empty set included.
ClosureSystem sub_meet(const MeetSemilattice& semilattice);
/// Subsets that are both convex in the meet order and meet-closed.
ClosureSystem convex_sub_meet(const MeetSemilattice& semilattice);
/// Ground set: strict pairs p < q; closed sets: transitively closed subsets.
ClosureSystem suborders(const FinitePoset& poset);

/// Every principal filter is a tree: no element of S has two lower covers.
/// Under this condition convex_sub_meet(S) is a convex geometry.
bool principal_filters_are_trees(const MeetSemilattice& semilattice);

struct FilterLattice {
  FiniteLattice lattice;
  /// Filter behind each lattice element, over the ids of the source lattice.
  std::vector<Bitset> filters;
  /// Source id x -> element holding fil(x); nullopt if fil(x) was not found.
  std::vector<std::optional<ElementId>> principal;
  /// x -> fil(x) is an order isomorphism onto the filter lattice.
  bool isomorphic = false;
};

/// Non-empty meet-closed up-sets of L0 ordered by reverse inclusion.
FilterLattice filter_lattice(const FiniteLattice& base);

/// Posets on exactly n elements, one per isomorphism class, in a fixed order.
/// Throws Error{kBoundExceeded} for n > 6.
std::vector<FinitePoset> all_posets(std::size_t n);
/// Meet semilattices on exactly n elements up to isomorphism (n <= 6).
std::vector<MeetSemilattice> all_meet_semilattices(std::size_t n);
/// Every Moore family on an n-element ground set, no isomorphism reduction.
/// n <= 3 always; n = 4 requires allow_large; larger n throws Error{kBoundExceeded}.
std::vector<ClosureSystem> all_moore(std::size_t n, bool allow_large = false);
/// Seeded random posets with 1..max_n elements.
std::vector<FinitePoset> random_posets(std::size_t count, std::size_t max_n, std::uint64_t seed);

enum class CorpusKind { kAllPosets, kAllMeetSemilattices, kAllMoore, kRandomPosets };

struct CorpusSpec {
  CorpusKind kind = CorpusKind::kAllMoore;
  std::size_t n = 3;  ///< exact size for enumerations, max size for random posets
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool allow_large = false;
};

struct CorpusItem {
  std::string id;
  ClosureSystem system;
};

/// Posets become Co(P), semilattices Sub(S), Moore families stay as they are.
std::vector<CorpusItem> corpus(const CorpusSpec& spec);

/// Moore families on 2 and 3 points, Co(P) for every poset of size 1..5,
/// Sub(S) for every meet semilattice of size 1..5, then `random_count`
/// random posets of size at most `random_max_n`.
std::vector<CorpusItem> standard_corpus(std::uint64_t seed, std::size_t random_count = 200,
                                        std::size_t random_max_n = 7);

}  // namespace cgeom

#endif  // CGEOM_GENERATORS_HPP
