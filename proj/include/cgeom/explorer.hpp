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

#ifndef CGEOM_EXPLORER_HPP
#define CGEOM_EXPLORER_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgeom {

/// Elements of lazy lattices are canonical labels: equal labels, equal elements.
using LazyElement = std::string;

struct CoverList {
  std::vector<LazyElement> covers;
  /// The oracle stopped at the budget; more covers exist.
  bool truncated = false;
};

/// Strongly coatomic lattice given by oracles, explored top-down.
///
/// Oracles must be deterministic per (element, budget) and return pairwise
/// distinct covers strictly below their argument. Implementations are
/// stateless, so one instance may be queried from several threads.
class LazyLattice {
 public:
  virtual ~LazyLattice() = default;

  virtual std::string name() const = 0;
  virtual LazyElement top() const = 0;
  virtual CoverList lower_covers(const LazyElement& element, std::size_t budget) const = 0;

  virtual bool has_meet() const { return false; }
  virtual std::optional<LazyElement> meet(const LazyElement&, const LazyElement&) const { return std::nullopt; }

  /// |upper \ lower| for closure-system instances whose elements are sets;
  /// SIZE_MAX for an infinite difference, nullopt when elements are not sets.
  virtual std::optional<std::size_t> difference_size(const LazyElement&, const LazyElement&) const {
    return std::nullopt;
  }

  virtual std::string label(const LazyElement& element) const { return element; }
};

struct WindowNode {
  LazyElement element;
  std::size_t level = 0;
  /// Oracle answer at the window budget.
  CoverList oracle;
  /// Covers were added to the window.
  bool expanded = false;
};

/// Finite downward slice of a lazy lattice.
struct Window {
  std::vector<WindowNode> nodes;
  std::map<LazyElement, std::size_t> index;
  std::size_t depth = 0;
  std::size_t budget = 0;

  std::optional<std::size_t> find(const LazyElement& e) const;
  /// Unexpanded node whose oracle still reports covers.
  bool is_frontier(std::size_t node) const;
  /// Known to have exactly one lower cover.
  bool is_join_irreducible(std::size_t node) const;
  /// Cover edges (lower node, upper node) between window nodes.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;
};

/// Breadth-first downward closure of the top (plus `extra_roots`) to `depth`
/// levels, at most `budget` covers per element. Throws
/// Error{kOracleInconsistent} when a re-query differs or a cover is not
/// strictly below its element, and Error{kPreconditionFailed} for zero bounds.
Window explore(const LazyLattice& lattice, std::size_t depth, std::size_t budget,
               const std::vector<LazyElement>& extra_roots = {});

enum class WindowProperty { kCoverSingleton, kUniqueJ, kLowerSemimodular, kStronglySpatialAt, kSpatial };

struct PropertyQuery {
  WindowProperty property = WindowProperty::kCoverSingleton;
  /// Arguments of strongly_spatial_at; "top" names the top element.
  LazyElement a;
  LazyElement b;
};

/// Parses "cover_singleton", "unique_j", "lower_semimodular", "spatial" and
/// "strongly_spatial_at:A,B". Throws Error{kParseError}.
PropertyQuery parse_property(std::string_view text);
std::string property_name(WindowProperty property);

enum class VerdictStatus { kHoldsInWindow, kFailsWithWitness, kInconclusive };

std::string status_name(VerdictStatus status);

struct Verdict {
  VerdictStatus status = VerdictStatus::kInconclusive;
  /// Present only for kFailsWithWitness.
  std::vector<LazyElement> witness;
  std::string property;
  std::string note;
  std::size_t depth = 0;
  std::size_t budget = 0;
};

/// Three-valued check of `query` from window facts and oracle answers about
/// window elements. Throws Error{kPropertyNeedsMeetOracle} for
/// lower_semimodular and strongly_spatial_at on instances without meets.
Verdict window_check(const LazyLattice& lattice, const Window& window, const PropertyQuery& query);

/// "lattice_K", "omega_zero_or_finite", "chain_dual_times_two_doubled_atom"
/// or "trivial". Throws Error{kUnknownInstance}.
std::unique_ptr<LazyLattice> named_instance(std::string_view name);

/// Label of the finite closed set {members} of the omega instance.
LazyElement omega_finite_set(const std::vector<std::size_t>& members);

}  // namespace cgeom

#endif  // CGEOM_EXPLORER_HPP
