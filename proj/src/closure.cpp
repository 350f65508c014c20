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

#include "cgeom/closure.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "cgeom/error.hpp"

namespace cgeom {

namespace {

void require_size(const ClosureSystem& cs, const Bitset& a) {
  if (a.size() != cs.ground_size()) {
    throw Error(ErrorCode::kElementOutOfGround,
                "subset over " + std::to_string(a.size()) + " elements, ground has " + std::to_string(cs.ground_size()));
  }
}

Bitset indices_to_bitset(std::size_t n, const IndexList& indices) {
  Bitset b(n);
  for (std::size_t i : indices) {
    if (i >= n) {
      throw Error(ErrorCode::kElementOutOfGround,
                  "index " + std::to_string(i) + " outside ground of size " + std::to_string(n));
    }
    b.set(i);
  }
  return b;
}

void sort_unique(std::vector<Bitset>& sets) {
  std::sort(sets.begin(), sets.end(), cardinality_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace

ClosureSystem ClosureSystem::from_family(std::vector<std::string> ground, std::vector<Bitset> family) {
  const std::size_t n = ground.size();
  for (const Bitset& f : family) {
    if (f.size() != n) throw Error(ErrorCode::kElementOutOfGround, "family member has the wrong width");
  }
  sort_unique(family);
  std::unordered_set<Bitset, BitsetHash> present(family.begin(), family.end());
  if (!present.contains(full_bitset(n))) {
    throw Error(ErrorCode::kPreconditionFailed, "family is not a Moore family: ground set missing");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!present.contains(family[i] & family[j])) {
        throw Error(ErrorCode::kPreconditionFailed, "family is not closed under intersection");
      }
    }
  }
  ClosureSystem cs;
  cs.ground_ = std::move(ground);
  cs.kind_ = ClosureKind::kFamily;
  cs.family_ = std::move(family);
  return cs;
}

ClosureSystem ClosureSystem::from_implications(std::vector<std::string> ground, std::vector<Implication> base) {
  const std::size_t n = ground.size();
  for (const Implication& imp : base) {
    if (imp.premise.size() != n || imp.conclusion >= n) {
      throw Error(ErrorCode::kElementOutOfGround, "implication references an element outside the ground set");
    }
  }
  ClosureSystem cs;
  cs.ground_ = std::move(ground);
  cs.kind_ = ClosureKind::kImplications;
  cs.base_ = std::move(base);
  return cs;
}

Bitset ClosureSystem::singleton(std::size_t x) const { return indices_to_bitset(ground_size(), {x}); }

Bitset ClosureSystem::from_indices(const IndexList& indices) const { return indices_to_bitset(ground_size(), indices); }

Bitset ClosureSystem::close(const Bitset& a) const {
  require_size(*this, a);
  if (kind_ == ClosureKind::kFamily) {
    Bitset result = full_bitset(ground_size());
    for (const Bitset& f : family_) {
      if (a.is_subset_of(f)) result &= f;
    }
    return result;
  }
  Bitset result = a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Implication& imp : base_) {
      if (!result.test(imp.conclusion) && imp.premise.is_subset_of(result)) {
        result.set(imp.conclusion);
        changed = true;
      }
    }
  }
  return result;
}

std::vector<Bitset> ClosureSystem::closed_sets(std::size_t limit) const {
  if (kind_ == ClosureKind::kFamily) return family_;
  std::vector<Bitset> out;
  next_closure(ground_size(), [this](const Bitset& a) { return close(a); },
               [&](const Bitset& c) {
                 if (out.size() == limit) {
                   throw Error(ErrorCode::kBoundExceeded, "more than " + std::to_string(limit) + " closed sets");
                 }
                 out.push_back(c);
               });
  std::sort(out.begin(), out.end(), cardinality_less);
  return out;
}

std::string ClosureSystem::format(const Bitset& a) const {
  std::string out = "{";
  bool first = true;
  for_each_bit(a, [&](std::size_t i) {
    if (!first) out += ",";
    out += i < ground_.size() ? ground_[i] : std::to_string(i);
    first = false;
  });
  return out + "}";
}

MadeClosure make_closure(std::vector<std::string> ground, const std::vector<IndexList>& family) {
  const std::size_t n = ground.size();
  std::vector<Bitset> input;
  input.reserve(family.size());
  for (const IndexList& f : family) input.push_back(indices_to_bitset(n, f));
  std::unordered_set<Bitset, BitsetHash> original(input.begin(), input.end());

  std::vector<Bitset> sets = input;
  sets.push_back(full_bitset(n));
  sort_unique(sets);
  std::unordered_set<Bitset, BitsetHash> present(sets.begin(), sets.end());
  // Pairwise intersections until nothing new appears.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = sets.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        Bitset meet = sets[i] & sets[j];
        if (present.insert(meet).second) {
          sets.push_back(std::move(meet));
          grew = true;
        }
      }
    }
  }
  sort_unique(sets);
  std::vector<Bitset> added;
  for (const Bitset& s : sets) {
    if (!original.contains(s)) added.push_back(s);
  }
  return {ClosureSystem::from_family(std::move(ground), std::move(sets)), std::move(added)};
}

MadeClosure make_closure(std::vector<std::string> ground, const std::vector<ImplicationSpec>& implications) {
  const std::size_t n = ground.size();
  std::vector<Implication> base;
  base.reserve(implications.size());
  for (const ImplicationSpec& spec : implications) {
    if (spec.conclusion >= n) {
      throw Error(ErrorCode::kElementOutOfGround, "conclusion " + std::to_string(spec.conclusion) + " outside ground");
    }
    base.push_back({indices_to_bitset(n, spec.premise), spec.conclusion});
  }
  return {ClosureSystem::from_implications(std::move(ground), std::move(base)), {}};
}

void next_closure(std::size_t n, const std::function<Bitset(const Bitset&)>& close,
                  const std::function<void(const Bitset&)>& visit) {
  Bitset current = close(Bitset(n));
  visit(current);
  Bitset prefix(n);  // elements with index < i
  while (true) {
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      if (current.test(k)) continue;
      prefix.reset();
      for (std::size_t j = 0; j < k; ++j) prefix.set(j);
      Bitset candidate = current & prefix;
      candidate.set(k);
      Bitset closed = close(candidate);
      if ((closed & prefix) == (current & prefix)) {
        current = std::move(closed);
        visit(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

Bitset close(const ClosureSystem& cs, const Bitset& a) { return cs.close(a); }

std::optional<ElementId> ClosureLattice::element_of(const Bitset& set) const {
  auto it = std::find(closed.begin(), closed.end(), set);
  if (it == closed.end()) return std::nullopt;
  return static_cast<ElementId>(it - closed.begin());
}

ClosureLattice cld_lattice(const ClosureSystem& cs) {
  std::vector<Bitset> closed = cs.closed_sets();
  const std::size_t n = closed.size();
  std::vector<std::string> names;
  std::vector<Bitset> up(n, Bitset(n));
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(cs.format(closed[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (closed[i].is_subset_of(closed[j])) up[i].set(j);
    }
  }
  return {FiniteLattice::from_up_sets(std::move(names), std::move(up)), std::move(closed)};
}

CheckResult<AepWitness> aep(const ClosureSystem& cs) {
  const std::size_t n = cs.ground_size();
  std::vector<Bitset> hulls(n);
  for (const Bitset& a : cs.closed_sets()) {
    for (std::size_t x = 0; x < n; ++x) {
      if (a.test(x)) continue;
      Bitset ax = a;
      ax.set(x);
      hulls[x] = cs.close(ax);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (a.test(x)) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        if (a.test(y)) continue;
        if (hulls[x] == hulls[y]) return CheckResult<AepWitness>::fail({a, x, y});
      }
    }
  }
  return CheckResult<AepWitness>::pass();
}

CheckResult<CoverWitness> cover_singleton(const ClosureSystem& cs) {
  const ClosureLattice cld = cld_lattice(cs);
  for (const auto& [lo, hi] : cld.lattice.cover_pairs()) {
    const Bitset diff = cld.closed[hi] - cld.closed[lo];
    if (diff.count() != 1) return CheckResult<CoverWitness>::fail({cld.closed[lo], cld.closed[hi]});
  }
  return CheckResult<CoverWitness>::pass();
}

ConvexGeometryVerdict is_convex_geometry(const ClosureSystem& cs) {
  ConvexGeometryVerdict v;
  v.zero_closure = cs.close(cs.empty_set()).none();
  auto anti = aep(cs);
  v.anti_exchange = anti.holds();
  v.aep_witness = anti.witness;
  v.convex = v.zero_closure && v.anti_exchange;
  if (!v.zero_closure) v.reason = "not-zero-closure";
  if (!v.anti_exchange) v.reason += std::string(v.reason.empty() ? "" : ";") + "anti-exchange-fails";
  return v;
}

Bitset extreme_points(const ClosureSystem& cs, const Bitset& a) {
  require_size(cs, a);
  Bitset ex(cs.ground_size());
  for_each_bit(a, [&](std::size_t x) {
    Bitset rest = a;
    rest.reset(x);
    if (!cs.close(rest).test(x)) ex.set(x);
  });
  return ex;
}

ClosureSystem standard_representation(const FiniteLattice& lattice) {
  const auto& ji = lattice.join_irreducibles();
  std::vector<std::string> ground;
  ground.reserve(ji.size());
  for (ElementId j : ji) ground.push_back(lattice.name(j));
  std::vector<Bitset> family;
  family.reserve(lattice.size());
  for (ElementId a = 0; a < lattice.size(); ++a) {
    Bitset s(ji.size());
    const Bitset& down = lattice.down_set(a);
    for (std::size_t i = 0; i < ji.size(); ++i) {
      if (down.test(ji[i])) s.set(i);
    }
    family.push_back(std::move(s));
  }
  return ClosureSystem::from_family(std::move(ground), std::move(family));
}

CjiCorrespondence cji_correspondence(const ClosureSystem& cs) {
  if (!cover_singleton(cs)) {
    throw Error(ErrorCode::kPreconditionFailed, "cji_correspondence requires singleton cover differences");
  }
  const ClosureLattice cld = cld_lattice(cs);
  const FiniteLattice& lat = cld.lattice;
  const Bitset base = cs.close(cs.empty_set());
  CjiCorrespondence out;
  std::vector<bool> image(lat.size(), false);
  for (std::size_t x = 0; x < cs.ground_size(); ++x) {
    if (base.test(x)) continue;
    Bitset hull = cs.close(cs.singleton(x));
    out.pairs.emplace_back(x, hull);
    if (out.failure) continue;
    Bitset below = hull;
    below.reset(x);
    const auto hull_id = cld.element_of(hull);
    const auto below_id = cld.element_of(below);
    if (!below_id) {
      out.failure = cs.format(below) + " is not closed";
    } else if (lat.lower_covers(*hull_id) != std::vector<ElementId>{*below_id}) {
      out.failure = cs.format(below) + " is not the unique lower cover of " + cs.format(hull);
    } else if (image[*hull_id]) {
      out.failure = cs.format(hull) + " is hit twice";
    } else {
      image[*hull_id] = true;
    }
  }
  if (!out.failure) {
    for (ElementId j : lat.join_irreducibles()) {
      if (!image[j]) {
        out.failure = cs.format(cld.closed[j]) + " is join irreducible but not of the form gamma(x)";
        break;
      }
    }
  }
  return out;
}

}  // namespace cgeom
