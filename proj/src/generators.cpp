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

#include "cgeom/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cgeom/error.hpp"

namespace cgeom {

namespace {

std::vector<std::string> indexed_names(std::string_view prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

void transitive_close(std::vector<Bitset>& up) {
  for (std::size_t k = 0; k < up.size(); ++k) {
    for (std::size_t i = 0; i < up.size(); ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
}

// Smallest adjacency code over all relabelings; n <= 8.
std::uint64_t canonical_code(const std::vector<Bitset>& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        code = code << 1 | (up[perm[i]].test(perm[j]) ? 1 : 0);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Bitset> decode(std::uint64_t code, std::size_t n) {
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      if (code & 1) up[i].set(j);
      code >>= 1;
    }
  }
  return up;
}

std::optional<ElementId> poset_meet(const FinitePoset& p, ElementId a, ElementId b) {
  // The meet is the lower bound that every other lower bound sits under.
  for (ElementId m = 0; m < p.size(); ++m) {
    if (!p.leq(m, a) || !p.leq(m, b)) continue;
    bool greatest = true;
    for (ElementId c = 0; c < p.size() && greatest; ++c) {
      if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, m)) greatest = false;
    }
    if (greatest) return m;
  }
  return std::nullopt;
}

}  // namespace

FinitePoset FinitePoset::build(std::vector<std::string> names, std::span<const IdPair> relation) {
  std::size_t n = names.size();
  if (n == 0) {
    for (const auto& [a, b] : relation) n = std::max({n, a + 1, b + 1});
    names = indexed_names("", n);
  }
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [a, b] : relation) {
    if (a >= n || b >= n) throw Error(ErrorCode::kUnknownElement, "relation references an unknown element");
    up[a].set(b);
  }
  transitive_close(up);
  return from_up_sets(std::move(names), std::move(up));
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> names, std::vector<Bitset> up) {
  const std::size_t n = up.size();
  if (names.empty()) names = indexed_names("", n);
  if (names.size() != n) throw Error(ErrorCode::kParseError, "name count does not match element count");
  for (std::size_t a = 0; a < n; ++a) {
    if (!up[a].test(a)) throw Error(ErrorCode::kNotAPartialOrder, "order is not reflexive at " + names[a]);
    for (std::size_t b = a + 1; b < n; ++b) {
      if (up[a].test(b) && up[b].test(a)) {
        throw Error(ErrorCode::kNotAPartialOrder, "antisymmetry fails for " + names[a] + ", " + names[b]);
      }
    }
    for_each_bit(up[a], [&](std::size_t b) {
      if (!up[b].is_subset_of(up[a])) {
        throw Error(ErrorCode::kNotAPartialOrder, "order is not transitive at " + names[a]);
      }
    });
  }
  FinitePoset p;
  p.names_ = std::move(names);
  p.up_ = std::move(up);
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) up[i].set(j);
  }
  return from_up_sets(indexed_names("p", n), std::move(up));
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  return from_up_sets(indexed_names("p", n), std::move(up));
}

FinitePoset FinitePoset::of_lattice(const FiniteLattice& lattice) {
  std::vector<Bitset> up;
  for (ElementId a = 0; a < lattice.size(); ++a) up.push_back(lattice.up_set(a));
  return from_up_sets(lattice.names(), std::move(up));
}

std::vector<IdPair> FinitePoset::cover_pairs() const {
  std::vector<IdPair> out;
  for (ElementId a = 0; a < size(); ++a) {
    for_each_bit(up_[a], [&](std::size_t b) {
      if (b == a) return;
      bool between = false;
      for_each_bit(up_[a], [&](std::size_t c) {
        if (c != a && c != b && up_[c].test(b)) between = true;
      });
      if (!between) out.emplace_back(a, b);
    });
  }
  return out;
}

MeetSemilattice MeetSemilattice::from_table(std::vector<std::string> names, std::vector<std::vector<ElementId>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::kParseError, "meet table is empty");
  if (names.empty()) names = indexed_names("s", n);
  if (names.size() != n) throw Error(ErrorCode::kParseError, "name count does not match meet table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorCode::kParseError, "meet table is not square");
    for (ElementId v : table[a]) {
      if (v >= n) throw Error(ErrorCode::kParseError, "meet table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a][a] != a) throw Error(ErrorCode::kParseError, "meet is not idempotent at " + names[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a]) throw Error(ErrorCode::kParseError, "meet is not commutative");
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::kParseError, "meet is not associative");
        }
      }
    }
  }
  MeetSemilattice s;
  s.names_ = std::move(names);
  s.table_ = std::move(table);
  return s;
}

MeetSemilattice MeetSemilattice::from_poset(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::vector<ElementId>> table(n, std::vector<ElementId>(n));
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      auto m = poset_meet(poset, a, b);
      if (!m) {
        throw Error(ErrorCode::kPreconditionFailed,
                    "no meet for " + poset.names()[a] + ", " + poset.names()[b]);
      }
      table[a][b] = *m;
    }
  }
  return from_table(poset.names(), std::move(table));
}

FinitePoset MeetSemilattice::order() const {
  const std::size_t n = size();
  std::vector<Bitset> up(n, Bitset(n));
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (table_[a][b] == a) up[a].set(b);
    }
  }
  return FinitePoset::from_up_sets(names_, std::move(up));
}

namespace {

std::vector<Implication> convexity_rules(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<Implication> base;
  for (ElementId lo = 0; lo < n; ++lo) {
    for (ElementId hi = 0; hi < n; ++hi) {
      if (!p.less(lo, hi)) continue;
      for (ElementId x = 0; x < n; ++x) {
        if (p.less(lo, x) && p.less(x, hi)) base.push_back({make_bitset(n, {lo, hi}), x});
      }
    }
  }
  return base;
}

std::vector<Implication> meet_rules(const MeetSemilattice& s) {
  const std::size_t n = s.size();
  std::vector<Implication> base;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      const ElementId m = s.meet(a, b);
      if (m != a && m != b) base.push_back({make_bitset(n, {a, b}), m});
    }
  }
  return base;
}

}  // namespace

ClosureSystem co_poset(const FinitePoset& poset) {
  return ClosureSystem::from_implications(poset.names(), convexity_rules(poset));
}

ClosureSystem sub_meet(const MeetSemilattice& semilattice) {
  return ClosureSystem::from_implications(semilattice.names(), meet_rules(semilattice));
}

ClosureSystem convex_sub_meet(const MeetSemilattice& semilattice) {
  std::vector<Implication> base = convexity_rules(semilattice.order());
  std::vector<Implication> meets = meet_rules(semilattice);
  base.insert(base.end(), meets.begin(), meets.end());
  return ClosureSystem::from_implications(semilattice.names(), std::move(base));
}

ClosureSystem suborders(const FinitePoset& poset) {
  std::vector<IdPair> pairs;
  for (ElementId a = 0; a < poset.size(); ++a) {
    for (ElementId b = 0; b < poset.size(); ++b) {
      if (poset.less(a, b)) pairs.emplace_back(a, b);
    }
  }
  const std::size_t n = pairs.size();
  std::vector<std::string> ground;
  for (const auto& [a, b] : pairs) ground.push_back("(" + poset.names()[a] + "," + poset.names()[b] + ")");
  std::map<IdPair, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[pairs[i]] = i;
  std::vector<Implication> base;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pairs[i].second != pairs[j].first) continue;
      const IdPair composed{pairs[i].first, pairs[j].second};
      base.push_back({make_bitset(n, {i, j}), index.at(composed)});
    }
  }
  return ClosureSystem::from_implications(std::move(ground), std::move(base));
}

bool principal_filters_are_trees(const MeetSemilattice& semilattice) {
  const FinitePoset order = semilattice.order();
  std::vector<std::size_t> lower(order.size(), 0);
  for (const auto& [lo, hi] : order.cover_pairs()) {
    if (++lower[hi] > 1) return false;
  }
  return true;
}

FilterLattice filter_lattice(const FiniteLattice& base) {
  const std::size_t n = base.size();
  std::vector<Implication> rules;
  for (const auto& [lo, hi] : base.cover_pairs()) rules.push_back({make_bitset(n, {lo}), hi});
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      const ElementId m = base.meet(a, b);
      if (m != a && m != b) rules.push_back({make_bitset(n, {a, b}), m});
    }
  }
  const ClosureSystem filters_cs = ClosureSystem::from_implications(base.names(), std::move(rules));
  std::vector<Bitset> filters;
  for (Bitset& f : filters_cs.closed_sets()) {
    if (f.any()) filters.push_back(std::move(f));
  }
  const std::size_t m = filters.size();
  std::vector<std::string> names;
  std::vector<Bitset> up(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(filters_cs.format(filters[i]));
    for (std::size_t j = 0; j < m; ++j) {
      if (filters[j].is_subset_of(filters[i])) up[i].set(j);  // reverse inclusion
    }
  }
  FilterLattice out{FiniteLattice::from_up_sets(std::move(names), std::move(up)), std::move(filters), {}, false};
  std::vector<ElementId> map;
  for (ElementId x = 0; x < n; ++x) {
    auto it = std::find(out.filters.begin(), out.filters.end(), base.up_set(x));
    if (it == out.filters.end()) {
      out.principal.emplace_back(std::nullopt);
    } else {
      out.principal.emplace_back(static_cast<ElementId>(it - out.filters.begin()));
      map.push_back(*out.principal.back());
    }
  }
  out.isomorphic = map.size() == n && is_order_isomorphism(base, out.lattice, map);
  return out;
}

std::vector<FinitePoset> all_posets(std::size_t n) {
  if (n > 6) throw Error(ErrorCode::kBoundExceeded, "poset enumeration limited to n <= 6");
  std::vector<IdPair> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  // Every poset has a natural labeling, so relations inside i < j suffice.
  std::set<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) up[slots[s].first].set(slots[s].second);
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for_each_bit(up[a], [&](std::size_t b) {
        if (!up[b].is_subset_of(up[a])) transitive = false;
      });
    }
    if (transitive) codes.insert(canonical_code(up));
  }
  std::vector<FinitePoset> out;
  for (std::uint64_t code : codes) out.push_back(FinitePoset::from_up_sets(indexed_names("p", n), decode(code, n)));
  return out;
}

std::vector<MeetSemilattice> all_meet_semilattices(std::size_t n) {
  std::vector<MeetSemilattice> out;
  for (const FinitePoset& p : all_posets(n)) {
    bool is_semilattice = true;
    for (ElementId a = 0; a < n && is_semilattice; ++a) {
      for (ElementId b = a + 1; b < n && is_semilattice; ++b) is_semilattice = poset_meet(p, a, b).has_value();
    }
    if (is_semilattice) out.push_back(MeetSemilattice::from_poset(p));
  }
  return out;
}

std::vector<ClosureSystem> all_moore(std::size_t n, bool allow_large) {
  if (n > 4 || (n == 4 && !allow_large)) {
    throw Error(ErrorCode::kBoundExceeded, "Moore enumeration limited to n <= 3 (n = 4 behind a flag)");
  }
  const std::size_t subsets = std::size_t{1} << n;
  const std::size_t full = subsets - 1;
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < n; ++i) ground.emplace_back(1, static_cast<char>('a' + i));
  std::vector<ClosureSystem> out;
  // Family = bitmask over the 2^n subsets; the full set is always a member.
  const std::uint64_t candidates = std::uint64_t{1} << (subsets - 1);
  for (std::uint64_t rest = 0; rest < candidates; ++rest) {
    const std::uint64_t family = rest | (std::uint64_t{1} << full);
    bool closed = true;
    for (std::size_t s = 0; s < subsets && closed; ++s) {
      if (!(family >> s & 1)) continue;
      for (std::size_t t = s + 1; t < subsets; ++t) {
        if ((family >> t & 1) && !(family >> (s & t) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Bitset> sets;
    for (std::size_t s = 0; s < subsets; ++s) {
      if (!(family >> s & 1)) continue;
      Bitset b(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (s >> i & 1) b.set(i);
      }
      sets.push_back(std::move(b));
    }
    out.push_back(ClosureSystem::from_family(ground, std::move(sets)));
  }
  return out;
}

std::vector<FinitePoset> random_posets(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  if (max_n == 0 || max_n > 16) throw Error(ErrorCode::kBoundExceeded, "random posets need 1 <= max_n <= 16");
  // Raw engine output only: distribution objects are not portable across
  // standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<FinitePoset> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 1 + rng() % max_n;
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      up[i].set(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) up[i].set(j);
      }
    }
    transitive_close(up);
    out.push_back(FinitePoset::from_up_sets(indexed_names("p", n), std::move(up)));
  }
  return out;
}

std::vector<CorpusItem> corpus(const CorpusSpec& spec) {
  std::vector<CorpusItem> out;
  switch (spec.kind) {
    case CorpusKind::kAllPosets: {
      const auto posets = all_posets(spec.n);
      for (std::size_t i = 0; i < posets.size(); ++i) {
        out.push_back({"co_poset/n" + std::to_string(spec.n) + "/" + std::to_string(i), co_poset(posets[i])});
      }
      break;
    }
    case CorpusKind::kAllMeetSemilattices: {
      const auto semis = all_meet_semilattices(spec.n);
      for (std::size_t i = 0; i < semis.size(); ++i) {
        out.push_back({"sub_meet/n" + std::to_string(spec.n) + "/" + std::to_string(i), sub_meet(semis[i])});
      }
      break;
    }
    case CorpusKind::kAllMoore: {
      auto systems = all_moore(spec.n, spec.allow_large);
      for (std::size_t i = 0; i < systems.size(); ++i) {
        out.push_back({"moore/n" + std::to_string(spec.n) + "/" + std::to_string(i), std::move(systems[i])});
      }
      break;
    }
    case CorpusKind::kRandomPosets: {
      const auto posets = random_posets(spec.count, spec.n, spec.seed);
      for (std::size_t i = 0; i < posets.size(); ++i) {
        out.push_back({"random_poset/seed" + std::to_string(spec.seed) + "/" + std::to_string(i), co_poset(posets[i])});
      }
      break;
    }
  }
  return out;
}

std::vector<CorpusItem> standard_corpus(std::uint64_t seed, std::size_t random_count, std::size_t random_max_n) {
  std::vector<CorpusItem> out;
  auto append = [&out](std::vector<CorpusItem> items) {
    for (auto& item : items) out.push_back(std::move(item));
  };
  for (std::size_t n : {2, 3}) append(corpus({CorpusKind::kAllMoore, n, 0, 0, false}));
  for (std::size_t n = 1; n <= 5; ++n) append(corpus({CorpusKind::kAllPosets, n, 0, 0, false}));
  for (std::size_t n = 1; n <= 5; ++n) append(corpus({CorpusKind::kAllMeetSemilattices, n, 0, 0, false}));
  append(corpus({CorpusKind::kRandomPosets, random_max_n, random_count, seed, false}));
  return out;
}

}  // namespace cgeom
