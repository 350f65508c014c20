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

#ifndef CGEOM_CLOSURE_HPP
#define CGEOM_CLOSURE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgeom/bitset.hpp"
#include "cgeom/check.hpp"
#include "cgeom/lattice.hpp"

namespace cgeom {

using IndexList = std::vector<std::size_t>;

/// Premise -> single conclusion, over ground indices.
struct Implication {
  Bitset premise;
  std::size_t conclusion = 0;
};

/// Index-list form used by file input and make_closure.
struct ImplicationSpec {
  IndexList premise;
  std::size_t conclusion = 0;
};

enum class ClosureKind { kFamily, kImplications };

/// Closure system (X, gamma) on a finite ground set.
///
/// kFamily systems hold a Moore family and close A by intersecting every
/// member that contains it. kImplications systems close A by forward chaining
/// to the least fixed point. Immutable after construction.
class ClosureSystem {
 public:
  /// `family` must already be a Moore family over `ground` (checked).
  static ClosureSystem from_family(std::vector<std::string> ground, std::vector<Bitset> family);
  static ClosureSystem from_implications(std::vector<std::string> ground, std::vector<Implication> base);

  std::size_t ground_size() const noexcept { return ground_.size(); }
  const std::vector<std::string>& ground() const noexcept { return ground_; }
  ClosureKind kind() const noexcept { return kind_; }
  const std::vector<Bitset>& family() const noexcept { return family_; }
  const std::vector<Implication>& implications() const noexcept { return base_; }

  Bitset empty_set() const { return Bitset(ground_size()); }
  Bitset singleton(std::size_t x) const;
  Bitset from_indices(const IndexList& indices) const;

  /// gamma(A). Throws Error{kElementOutOfGround} on a size mismatch.
  Bitset close(const Bitset& a) const;
  bool is_closed(const Bitset& a) const { return close(a) == a; }

  /// Every closed set, ordered by cardinality then lexicographically.
  /// Implication systems are enumerated with NextClosure; throws
  /// Error{kBoundExceeded} past `limit` sets.
  std::vector<Bitset> closed_sets(std::size_t limit = std::size_t{1} << 22) const;

  /// Display form "{a,b}".
  std::string format(const Bitset& a) const;

 private:
  ClosureSystem() = default;

  std::vector<std::string> ground_;
  ClosureKind kind_ = ClosureKind::kFamily;
  std::vector<Bitset> family_;
  std::vector<Implication> base_;
};

/// Result of make_closure: the system plus the sets added to complete a family.
struct MadeClosure {
  ClosureSystem system;
  std::vector<Bitset> added;
};

/// Completes `family` to a Moore family (adds X, closes under intersection)
/// and reports each added set.
MadeClosure make_closure(std::vector<std::string> ground, const std::vector<IndexList>& family);
MadeClosure make_closure(std::vector<std::string> ground, const std::vector<ImplicationSpec>& implications);

/// Lectic enumeration of the closed sets of an arbitrary closure operator on
/// 0..n-1; calls `visit` for each closed set in lectic order.
void next_closure(std::size_t n, const std::function<Bitset(const Bitset&)>& close,
                  const std::function<void(const Bitset&)>& visit);

Bitset close(const ClosureSystem& cs, const Bitset& a);

/// Cld(X, gamma) with the closed set behind each lattice element.
struct ClosureLattice {
  FiniteLattice lattice;
  std::vector<Bitset> closed;

  std::optional<ElementId> element_of(const Bitset& set) const;
};

/// Lattice elements follow closed_sets() order, so element 0 is gamma(empty).
ClosureLattice cld_lattice(const ClosureSystem& cs);

struct AepWitness {
  Bitset closed;  ///< A
  std::size_t x = 0;
  std::size_t y = 0;
};

/// Anti-exchange check. Closed sets are visited by increasing cardinality and
/// pairs x < y in index order; the first violation is returned.
CheckResult<AepWitness> aep(const ClosureSystem& cs);

struct CoverWitness {
  Bitset lower;
  Bitset upper;
};

/// Every cover A < B of Cld has |B \ A| = 1.
CheckResult<CoverWitness> cover_singleton(const ClosureSystem& cs);

struct ConvexGeometryVerdict {
  bool convex = false;
  bool zero_closure = false;
  bool anti_exchange = false;
  std::optional<AepWitness> aep_witness;
  /// "", "not-zero-closure", "anti-exchange-fails" or both joined with ';'.
  std::string reason;
};

ConvexGeometryVerdict is_convex_geometry(const ClosureSystem& cs);

/// Ex(A) = { x in A : x not in gamma(A \ {x}) }.
Bitset extreme_points(const ClosureSystem& cs, const Bitset& a);

/// Closure system on Ji(L): ground index i stands for join_irreducibles()[i]
/// and the closed sets are the Ji(a).
ClosureSystem standard_representation(const FiniteLattice& lattice);

struct CjiCorrespondence {
  /// (x, gamma({x})) for each x outside gamma(empty), ascending x.
  std::vector<std::pair<std::size_t, Bitset>> pairs;
  /// Set when the map fails to be a bijection onto the completely join
  /// irreducible closed sets; describes the first failure found.
  std::optional<std::string> failure;
};

/// Requires cover_singleton(cs); throws Error{kPreconditionFailed} otherwise.
CjiCorrespondence cji_correspondence(const ClosureSystem& cs);

}  // namespace cgeom

#endif  // CGEOM_CLOSURE_HPP
