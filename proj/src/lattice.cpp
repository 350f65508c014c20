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

#include "cgeom/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "cgeom/error.hpp"

namespace cgeom {

namespace {

std::vector<std::string> default_names(std::vector<std::string> names, std::size_t n) {
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  return names;
}

std::string pair_text(const std::vector<std::string>& names, ElementId a, ElementId b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

}  // namespace

FiniteLattice FiniteLattice::build(std::vector<std::string> names, std::span<const IdPair> relation,
                                   RelationMode mode) {
  std::size_t n = names.size();
  if (n == 0) {
    for (const auto& [a, b] : relation) n = std::max({n, a + 1, b + 1});
  }
  for (const auto& [a, b] : relation) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::kUnknownElement,
                  "relation pair references id " + std::to_string(std::max(a, b)) + " of " + std::to_string(n));
    }
  }
  names = default_names(std::move(names), n);
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [a, b] : relation) {
    if (mode == RelationMode::kCovers && a == b) {
      throw Error(ErrorCode::kNotAPartialOrder, "element " + names[a] + " cannot cover itself");
    }
    up[a].set(b);
  }
  // Both modes generate the order by reflexive-transitive closure; covers are
  // recomputed from it afterwards.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  return from_up_sets(std::move(names), std::move(up));
}

FiniteLattice FiniteLattice::from_up_sets(std::vector<std::string> names, std::vector<Bitset> up) {
  const std::size_t n = up.size();
  if (n == 0) throw Error(ErrorCode::kNotALattice, "a lattice needs at least one element");
  names = default_names(std::move(names), n);
  if (names.size() != n) throw Error(ErrorCode::kParseError, "name count does not match element count");

  FiniteLattice lattice;
  lattice.names_ = std::move(names);
  lattice.up_ = std::move(up);
  lattice.down_.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (lattice.up_[a].size() != n || !lattice.up_[a].test(a)) {
      throw Error(ErrorCode::kNotAPartialOrder, "order is not reflexive at " + lattice.names_[a]);
    }
    for_each_bit(lattice.up_[a], [&](std::size_t b) { lattice.down_[b].set(a); });
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (lattice.up_[a].test(b) && lattice.up_[b].test(a)) {
        throw Error(ErrorCode::kNotAPartialOrder, "antisymmetry fails for " + pair_text(lattice.names_, a, b));
      }
    }
    bool transitive = true;
    for_each_bit(lattice.up_[a], [&](std::size_t b) {
      if (!lattice.up_[b].is_subset_of(lattice.up_[a])) transitive = false;
    });
    if (!transitive) throw Error(ErrorCode::kNotAPartialOrder, "order is not transitive at " + lattice.names_[a]);
  }
  lattice.finish();
  return lattice;
}

void FiniteLattice::finish() {
  const std::size_t n = size();
  up_count_.resize(n);
  down_count_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    up_count_[a] = up_[a].count();
    down_count_[a] = down_[a].count();
  }

  // Lattice axioms: every pair needs a least upper and a greatest lower bound.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (compute_join(a, b) == n) {
        throw Error(ErrorCode::kNotALattice, "no join for " + pair_text(names_, a, b));
      }
      if (compute_meet(a, b) == n) {
        throw Error(ErrorCode::kNotALattice, "no meet for " + pair_text(names_, a, b));
      }
    }
  }
  bottom_ = top_ = n;
  for (std::size_t a = 0; a < n; ++a) {
    if (up_count_[a] == n) bottom_ = a;
    if (down_count_[a] == n) top_ = a;
  }
  if (bottom_ == n || top_ == n) throw Error(ErrorCode::kNotALattice, "missing bottom or top");

  // Transitive reduction: a < b with nothing strictly between.
  lower_.assign(n, {});
  upper_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for_each_bit(up_[a], [&](std::size_t b) {
      if (b == a) return;
      Bitset between = up_[a] & down_[b];
      if (between.count() == 2) {
        upper_[a].push_back(b);
        lower_[b].push_back(a);
      }
    });
  }
  for (auto& v : lower_) std::sort(v.begin(), v.end());
  for (auto& v : upper_) std::sort(v.begin(), v.end());

  ji_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    if (lower_[a].size() == 1) ji_.push_back(a);
  }

  if (n <= kTableLimit) {
    join_table_.assign(n * n, 0);
    meet_table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        auto j = static_cast<std::uint32_t>(compute_join(a, b));
        auto m = static_cast<std::uint32_t>(compute_meet(a, b));
        join_table_[a * n + b] = join_table_[b * n + a] = j;
        meet_table_[a * n + b] = meet_table_[b * n + a] = m;
      }
    }
  }
}

// Returns size() when the join does not exist.
ElementId FiniteLattice::compute_join(ElementId a, ElementId b) const {
  const Bitset common = up_[a] & up_[b];
  const std::size_t count = common.count();
  ElementId found = size();
  for_each_bit(common, [&](std::size_t c) {
    if (found == size() && up_count_[c] == count) found = c;
  });
  if (found != size() && up_[found] != common) found = size();
  return found;
}

ElementId FiniteLattice::compute_meet(ElementId a, ElementId b) const {
  const Bitset common = down_[a] & down_[b];
  const std::size_t count = common.count();
  ElementId found = size();
  for_each_bit(common, [&](std::size_t c) {
    if (found == size() && down_count_[c] == count) found = c;
  });
  if (found != size() && down_[found] != common) found = size();
  return found;
}

void FiniteLattice::check(ElementId a) const {
  if (a >= size()) {
    throw Error(ErrorCode::kUnknownElement, "element id " + std::to_string(a) + " of " + std::to_string(size()));
  }
}

const std::string& FiniteLattice::name(ElementId a) const {
  check(a);
  return names_[a];
}

std::optional<ElementId> FiniteLattice::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ElementId>(it - names_.begin());
}

bool FiniteLattice::leq(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return up_[a].test(b);
}

ElementId FiniteLattice::meet(ElementId a, ElementId b) const {
  check(a);
  check(b);
  if (!meet_table_.empty()) return meet_table_[a * size() + b];
  return compute_meet(a, b);
}

ElementId FiniteLattice::join(ElementId a, ElementId b) const {
  check(a);
  check(b);
  if (!join_table_.empty()) return join_table_[a * size() + b];
  return compute_join(a, b);
}

ElementId FiniteLattice::meet_set(std::span<const ElementId> ids) const {
  ElementId acc = top_;
  for (ElementId x : ids) acc = meet(acc, x);
  return acc;
}

ElementId FiniteLattice::join_set(std::span<const ElementId> ids) const {
  ElementId acc = bottom_;
  for (ElementId x : ids) acc = join(acc, x);
  return acc;
}

ElementId FiniteLattice::join_set(const Bitset& ids) const {
  ElementId acc = bottom_;
  for_each_bit(ids, [&](std::size_t x) { acc = join(acc, x); });
  return acc;
}

const Bitset& FiniteLattice::up_set(ElementId a) const {
  check(a);
  return up_[a];
}

const Bitset& FiniteLattice::down_set(ElementId a) const {
  check(a);
  return down_[a];
}

const std::vector<ElementId>& FiniteLattice::lower_covers(ElementId a) const {
  check(a);
  return lower_[a];
}

const std::vector<ElementId>& FiniteLattice::upper_covers(ElementId a) const {
  check(a);
  return upper_[a];
}

bool FiniteLattice::covers(ElementId lower, ElementId upper) const {
  check(lower);
  const auto& v = lower_covers(upper);
  return std::binary_search(v.begin(), v.end(), lower);
}

std::vector<IdPair> FiniteLattice::cover_pairs() const {
  std::vector<IdPair> out;
  for (ElementId a = 0; a < size(); ++a) {
    for (ElementId b : upper_[a]) out.emplace_back(a, b);
  }
  return out;
}

bool FiniteLattice::is_join_irreducible(ElementId a) const { return lower_covers(a).size() == 1; }

std::optional<ElementId> FiniteLattice::ji_lower_cover(ElementId a) const {
  if (!is_join_irreducible(a)) return std::nullopt;
  return lower_[a].front();
}

std::vector<ElementId> FiniteLattice::atoms() const { return upper_[bottom_]; }

std::size_t lattice_algebra(const FiniteLattice& lattice, LatticeOp op, std::span<const ElementId> args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw Error(ErrorCode::kPreconditionFailed, "expected " + std::to_string(k) + " arguments");
    }
  };
  switch (op) {
    case LatticeOp::kLeq: need(2); return lattice.leq(args[0], args[1]) ? 1 : 0;
    case LatticeOp::kMeet: need(2); return lattice.meet(args[0], args[1]);
    case LatticeOp::kJoin: need(2); return lattice.join(args[0], args[1]);
    case LatticeOp::kMeetSet: return lattice.meet_set(args);
    case LatticeOp::kJoinSet: return lattice.join_set(args);
  }
  return 0;
}

std::vector<ElementId> covers_of(const FiniteLattice& lattice, ElementId a, CoverDirection direction) {
  return direction == CoverDirection::kLower ? lattice.lower_covers(a) : lattice.upper_covers(a);
}

std::vector<ElementId> ji_below(const FiniteLattice& lattice, ElementId a) {
  const Bitset& down = lattice.down_set(a);
  std::vector<ElementId> out;
  for (ElementId j : lattice.join_irreducibles()) {
    if (down.test(j)) out.push_back(j);
  }
  return out;
}

std::optional<RefinementWitness> refines(const FiniteLattice& lattice, std::span<const ElementId> a,
                                         std::span<const ElementId> b) {
  for (ElementId x : b) lattice.check(x);
  RefinementWitness witness;
  for (ElementId x : a) {
    lattice.check(x);
    auto it = std::find_if(b.begin(), b.end(), [&](ElementId y) { return lattice.leq(x, y); });
    if (it == b.end()) return std::nullopt;
    witness.pairs.emplace_back(x, *it);
  }
  return witness;
}

namespace construct {

FiniteLattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kPreconditionFailed, "chain needs n >= 1");
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) up[i].set(j);
  }
  return FiniteLattice::from_up_sets({}, std::move(up));
}

FiniteLattice antichain_with_bounds(std::size_t n) {
  // 0, middle elements, 1.
  const std::size_t size = n + 2;
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "m" + std::to_string(i));
  }
  names.push_back("1");
  std::vector<Bitset> up(size, Bitset(size));
  up[0].set();
  for (std::size_t i = 1; i <= n; ++i) {
    up[i].set(i);
    up[i].set(size - 1);
  }
  up[size - 1].set(size - 1);
  return FiniteLattice::from_up_sets(std::move(names), std::move(up));
}

FiniteLattice boolean(std::size_t n) {
  if (n > 16) throw Error(ErrorCode::kBoundExceeded, "boolean lattice limited to n <= 16");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> names(size);
  std::vector<Bitset> up(size, Bitset(size));
  for (std::size_t a = 0; a < size; ++a) {
    std::string label = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (a >> i & 1) {
        if (label.size() > 1) label += ",";
        label += std::to_string(i);
      }
    }
    names[a] = label + "}";
    for (std::size_t b = 0; b < size; ++b) {
      if ((a & b) == a) up[a].set(b);
    }
  }
  return FiniteLattice::from_up_sets(std::move(names), std::move(up));
}

FiniteLattice m3() { return antichain_with_bounds(3); }

FiniteLattice n5() {
  std::vector<IdPair> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return FiniteLattice::build({"0", "a", "b", "c", "1"}, covers, RelationMode::kCovers);
}

FiniteLattice product(const FiniteLattice& first, const FiniteLattice& second) {
  const std::size_t n1 = first.size();
  const std::size_t n2 = second.size();
  const std::size_t size = n1 * n2;
  std::vector<std::string> names(size);
  std::vector<Bitset> up(size, Bitset(size));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      const std::size_t id = i * n2 + j;
      names[id] = "(" + first.name(i) + "," + second.name(j) + ")";
      for_each_bit(first.up_set(i), [&](std::size_t k) {
        for_each_bit(second.up_set(j), [&](std::size_t l) { up[id].set(k * n2 + l); });
      });
    }
  }
  return FiniteLattice::from_up_sets(std::move(names), std::move(up));
}

FiniteLattice dual(const FiniteLattice& lattice) {
  std::vector<Bitset> up;
  up.reserve(lattice.size());
  for (ElementId a = 0; a < lattice.size(); ++a) up.push_back(lattice.down_set(a));
  return FiniteLattice::from_up_sets(lattice.names(), std::move(up));
}

FiniteLattice interval(const FiniteLattice& lattice, ElementId a, ElementId b) {
  if (!lattice.leq(a, b)) {
    throw Error(ErrorCode::kEmptyInterval, lattice.name(a) + " is not below " + lattice.name(b));
  }
  const Bitset inside = lattice.up_set(a) & lattice.down_set(b);
  const std::vector<ElementId> ids = members(inside);
  std::vector<std::size_t> index(lattice.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  std::vector<std::string> names;
  std::vector<Bitset> up(ids.size(), Bitset(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    names.push_back(lattice.name(ids[i]));
    for_each_bit(lattice.up_set(ids[i]) & inside, [&](std::size_t c) { up[i].set(index[c]); });
  }
  return FiniteLattice::from_up_sets(std::move(names), std::move(up));
}

FiniteLattice chain_dual_times_two_doubled_atom(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kPreconditionFailed, "doubled-atom lattice needs n >= 1");
  // Layout: (k,e) for k < n, e in {0,1}, skipping (n-1,1); then t_lo, t_hi.
  struct Node {
    std::size_t depth;
    int level;  // 0 or 1; 2 marks t_lo, 3 marks t_hi
  };
  std::vector<Node> nodes;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    for (int e = 0; e < 2; ++e) {
      if (k == n - 1 && e == 1) continue;
      nodes.push_back({k, e});
      names.push_back("(" + std::to_string(k) + "," + std::to_string(e) + ")");
    }
  }
  nodes.push_back({n - 1, 2});
  names.emplace_back("t_lo");
  nodes.push_back({n - 1, 3});
  names.emplace_back("t_hi");

  // Depth grows downward: (k,e) <= (k',e') iff k >= k' and e <= e'.
  // Both copies of the atom relate to everything else as (n-1,1) did.
  auto as_pair = [](const Node& x) { return std::pair<std::size_t, int>{x.depth, x.level >= 2 ? 1 : x.level}; };
  const std::size_t size = nodes.size();
  std::vector<Bitset> up(size, Bitset(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const Node& x = nodes[i];
      const Node& y = nodes[j];
      bool le;
      if (x.level >= 2 && y.level >= 2) {
        le = x.level <= y.level;
      } else {
        auto [kx, ex] = as_pair(x);
        auto [ky, ey] = as_pair(y);
        le = kx >= ky && ex <= ey;
      }
      if (le) up[i].set(j);
    }
  }
  return FiniteLattice::from_up_sets(std::move(names), std::move(up));
}

}  // namespace construct

bool is_order_isomorphism(const FiniteLattice& from, const FiniteLattice& to, std::span<const ElementId> map) {
  if (from.size() != to.size() || map.size() != from.size()) return false;
  std::vector<bool> hit(to.size(), false);
  for (ElementId x : map) {
    if (x >= to.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (ElementId a = 0; a < from.size(); ++a) {
    for (ElementId b = 0; b < from.size(); ++b) {
      if (from.leq(a, b) != to.leq(map[a], map[b])) return false;
    }
  }
  return true;
}

std::optional<std::vector<ElementId>> find_isomorphism(const FiniteLattice& first, const FiniteLattice& second) {
  const std::size_t n = first.size();
  if (n != second.size()) return std::nullopt;
  auto signature = [](const FiniteLattice& l, ElementId a) {
    return std::tuple{l.up_set(a).count(), l.down_set(a).count(), l.lower_covers(a).size(),
                      l.upper_covers(a).size()};
  };
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Assign elements in order of increasing down-set size so constraints bite early.
  std::sort(order.begin(), order.end(),
            [&](ElementId a, ElementId b) { return first.down_set(a).count() < first.down_set(b).count(); });
  std::vector<ElementId> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    const ElementId a = order[k];
    for (ElementId b = 0; b < n; ++b) {
      if (used[b] || signature(first, a) != signature(second, b)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const ElementId c = order[i];
        ok = first.leq(c, a) == second.leq(map[c], b) && first.leq(a, c) == second.leq(b, map[c]);
      }
      if (!ok) continue;
      map[a] = b;
      used[b] = true;
      if (extend(k + 1)) return true;
      used[b] = false;
    }
    map[a] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace cgeom
