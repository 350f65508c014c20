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

#include "cgeom/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cgeom/closure.hpp"
#include "cgeom/error.hpp"

namespace cgeom {

namespace {

bool is_antichain_extension(const FiniteLattice& l, const std::vector<ElementId>& chosen, ElementId e) {
  for (ElementId c : chosen) {
    if (l.leq(c, e) || l.leq(e, c)) return false;
  }
  return true;
}

bool size_then_lex(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ElementId join_without(const FiniteLattice& l, const std::vector<ElementId>& set, std::size_t skip) {
  ElementId acc = l.bottom();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i != skip) acc = l.join(acc, set[i]);
  }
  return acc;
}

bool is_irredundant(const FiniteLattice& l, const std::vector<ElementId>& set, ElementId w) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (join_without(l, set, i) == w) return false;
  }
  return true;
}

std::string names_of(const FiniteLattice& l, const std::vector<ElementId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += l.name(ids[i]);
  }
  return out + "}";
}

}  // namespace

CheckResult<SdJoinWitness> is_sd_join(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const ElementId w = l.join(x, y);
      for (ElementId z = 0; z < n; ++z) {
        if (z == y || l.join(x, z) != w) continue;
        if (l.join(x, l.meet(y, z)) != w) return CheckResult<SdJoinWitness>::fail({w, x, y, z});
      }
    }
  }
  return CheckResult<SdJoinWitness>::pass();
}

CheckResult<SdJoinStarWitness> is_sd_join_star(const FiniteLattice& l, std::size_t max_family) {
  if (max_family < 2) throw Error(ErrorCode::kBoundTooSmall, "SD-join-star needs families of size >= 2");
  const std::size_t n = l.size();

  // Antichains of size <= max_family, grouped by their join.
  std::vector<std::vector<std::vector<ElementId>>> by_join(n);
  std::vector<ElementId> chosen;
  std::function<void(ElementId, ElementId)> grow = [&](ElementId start, ElementId acc) {
    for (ElementId e = start; e < n; ++e) {
      if (!is_antichain_extension(l, chosen, e)) continue;
      chosen.push_back(e);
      const ElementId j = l.join(acc, e);
      by_join[j].push_back(chosen);
      if (chosen.size() < max_family) grow(e + 1, j);
      chosen.pop_back();
    }
  };
  grow(0, l.bottom());

  // For fixed Y, a failing Z exists iff some lower cover c of w admits at most
  // max_family elements z with y ^ z <= c for all y in Y whose join is w. That
  // set D_c is a down-set, so only its maximal elements need to be tried.
  // D_c is the intersection over y not below c of S(y, c) = { z <= w : y ^ z <= c }.
  for (ElementId w = 0; w < n; ++w) {
    auto& group = by_join[w];
    if (group.empty()) continue;
    std::sort(group.begin(), group.end(), size_then_lex);
    const Bitset& below = l.down_set(w);
    const std::vector<ElementId>& lower = l.lower_covers(w);
    std::vector<std::vector<Bitset>> separated(lower.size(), std::vector<Bitset>(n));
    for (std::size_t ci = 0; ci < lower.size(); ++ci) {
      for_each_bit(below, [&](ElementId y) {
        Bitset s(n);
        for_each_bit(below, [&](ElementId z) {
          if (l.leq(l.meet(y, z), lower[ci])) s.set(z);
        });
        separated[ci][y] = std::move(s);
      });
    }
    for (const auto& y : group) {
      for (std::size_t ci = 0; ci < lower.size(); ++ci) {
        const ElementId c = lower[ci];
        Bitset candidates = below;
        for (ElementId yi : y) {
          if (!l.leq(yi, c)) candidates &= separated[ci][yi];
        }
        if (l.join_set(candidates) != w) continue;
        std::vector<ElementId> maximal;
        for_each_bit(candidates, [&](ElementId z) {
          const auto& up = l.upper_covers(z);
          if (std::none_of(up.begin(), up.end(), [&](ElementId u) { return candidates.test(u); })) {
            maximal.push_back(z);
          }
        });
        std::vector<ElementId> pick;
        std::function<bool(std::size_t, ElementId)> search = [&](std::size_t start, ElementId acc) -> bool {
          for (std::size_t i = start; i < maximal.size(); ++i) {
            pick.push_back(maximal[i]);
            const ElementId j = l.join(acc, maximal[i]);
            if (j == w) return true;
            if (pick.size() < max_family && search(i + 1, j)) return true;
            pick.pop_back();
          }
          return false;
        };
        if (search(0, l.bottom())) return CheckResult<SdJoinStarWitness>::fail({w, y, pick});
      }
    }
  }
  return CheckResult<SdJoinStarWitness>::pass();
}

std::pair<ElementId, ElementId> sd_join_n_terms(const FiniteLattice& l, ElementId x, ElementId y, ElementId z,
                                                std::size_t k) {
  ElementId yk = y;
  ElementId zk = z;
  for (std::size_t i = 0; i < k; ++i) {
    const ElementId next_y = l.meet(y, l.join(x, zk));
    const ElementId next_z = l.meet(z, l.join(x, yk));
    yk = next_y;
    zk = next_z;
  }
  return {yk, zk};
}

CheckResult<Triple> satisfies_sd_join_n(const FiniteLattice& l, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kPreconditionFailed, "SD-join(n) needs n >= 1");
  const std::size_t size = l.size();
  for (ElementId x = 0; x < size; ++x) {
    for (ElementId y = 0; y < size; ++y) {
      for (ElementId z = 0; z < size; ++z) {
        const auto [yn, zn] = sd_join_n_terms(l, x, y, z, n);
        if (!l.leq(yn, l.join(x, l.meet(y, z)))) return CheckResult<Triple>::fail({x, y, z});
      }
    }
  }
  return CheckResult<Triple>::pass();
}

std::optional<std::size_t> sd_join_n_depth(const FiniteLattice& l, std::size_t cap) {
  for (std::size_t n = 1; n <= cap; ++n) {
    if (satisfies_sd_join_n(l, n)) return n;
  }
  return std::nullopt;
}

CheckResult<Triple> is_lower_semimodular(const FiniteLattice& l) {
  for (const auto& [a, b] : l.cover_pairs()) {
    for (ElementId c = 0; c < l.size(); ++c) {
      const ElementId lo = l.meet(a, c);
      const ElementId hi = l.meet(b, c);
      if (lo != hi && !l.covers(lo, hi)) return CheckResult<Triple>::fail({a, b, c});
    }
  }
  return CheckResult<Triple>::pass();
}

namespace {

std::optional<Triple> distributivity_failure(const FiniteLattice& l, const std::vector<ElementId>& ids) {
  for (ElementId x : ids) {
    for (ElementId y : ids) {
      for (ElementId z : ids) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CheckResult<Triple> is_distributive(const FiniteLattice& l) {
  std::vector<ElementId> all(l.size());
  for (ElementId a = 0; a < l.size(); ++a) all[a] = a;
  if (auto t = distributivity_failure(l, all)) return CheckResult<Triple>::fail(*t);
  return CheckResult<Triple>::pass();
}

ElementId mu(const FiniteLattice& l, ElementId x) {
  const auto& lower = l.lower_covers(x);
  if (lower.empty()) return x;
  return l.meet_set(lower);
}

CheckResult<ElementId> is_locally_distributive(const FiniteLattice& l) {
  for (ElementId x = 0; x < l.size(); ++x) {
    const std::vector<ElementId> ids = members(l.up_set(mu(l, x)) & l.down_set(x));
    if (distributivity_failure(l, ids)) return CheckResult<ElementId>::fail(x);
  }
  return CheckResult<ElementId>::pass();
}

CheckResult<ElementId> is_atomistic(const FiniteLattice& l) {
  const std::vector<ElementId> atoms = l.atoms();
  for (ElementId a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    ElementId acc = l.bottom();
    for (ElementId t : atoms) {
      if (l.leq(t, a)) acc = l.join(acc, t);
    }
    if (acc != a) return CheckResult<ElementId>::fail(a);
  }
  return CheckResult<ElementId>::pass();
}

std::vector<ElementId> minimal_ji_separators(const FiniteLattice& l, ElementId w, ElementId c) {
  std::vector<ElementId> all;
  for (ElementId p : l.join_irreducibles()) {
    if (l.leq(p, w) && !l.leq(p, c)) all.push_back(p);
  }
  std::vector<ElementId> minimal;
  for (ElementId p : all) {
    bool is_min = std::none_of(all.begin(), all.end(), [&](ElementId q) { return l.less(q, p); });
    if (is_min) minimal.push_back(p);
  }
  return minimal;
}

std::vector<ElementId> CanonicalJoinDecomposition::part_set() const {
  std::vector<ElementId> out;
  for (const auto& [c, k] : parts) out.push_back(k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ElementId> random_join_representation(const FiniteLattice& l, ElementId w, std::mt19937_64& rng) {
  const std::vector<ElementId> below = members(l.down_set(w));
  std::vector<ElementId> rep;
  ElementId acc = l.bottom();
  // Bottom alone represents bottom; otherwise draw until the join reaches w.
  if (w == l.bottom()) {
    if (rng() & 1) rep.push_back(w);
    return rep;
  }
  while (acc != w) {
    const ElementId e = below[rng() % below.size()];
    if (std::find(rep.begin(), rep.end(), e) != rep.end()) continue;
    rep.push_back(e);
    acc = l.join(acc, e);
  }
  std::sort(rep.begin(), rep.end());
  return rep;
}

DecompositionOutcome canonical_join_decomposition(const FiniteLattice& l, ElementId w, std::size_t samples,
                                                  std::uint64_t seed) {
  l.check(w);
  DecompositionOutcome out;
  CanonicalJoinDecomposition dec;
  dec.target = w;
  for (ElementId c : l.lower_covers(w)) {
    std::vector<ElementId> sep = minimal_ji_separators(l, w, c);
    if (sep.size() != 1) {
      out.offending_cover = c;
      out.separators = std::move(sep);
      out.reason = "cover " + l.name(c) + " has " + std::to_string(out.separators.size()) + " minimal separators";
      return out;
    }
    dec.parts.emplace_back(c, sep.front());
  }

  std::vector<ElementId> ks;
  for (const auto& [c, k] : dec.parts) ks.push_back(k);
  if (l.join_set(ks) != w) {
    out.reason = "parts do not join to the target";
    return out;
  }
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const ElementId rest = join_without(l, ks, i);
    const auto& lower = l.lower_covers(w);
    auto it = std::find_if(lower.begin(), lower.end(), [&](ElementId d) { return l.leq(rest, d); });
    if (it == lower.end()) {
      out.reason = "part " + l.name(ks[i]) + " is redundant";
      return out;
    }
    dec.certificates.emplace_back(dec.parts[i].first, *it);
  }

  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(w) * 0x9e3779b97f4a7c15ULL));
  const std::vector<ElementId> part_set = dec.part_set();
  for (std::size_t s = 0; s < samples; ++s) {
    const std::vector<ElementId> rep = random_join_representation(l, w, rng);
    if (!refines(l, part_set, rep)) {
      out.reason = "parts do not refine the representation " + names_of(l, rep);
      return out;
    }
  }
  out.decomposition = std::move(dec);
  return out;
}

UniqueJi unique_min_ji(const FiniteLattice& l, ElementId w, ElementId c) {
  if (!l.covers(c, w)) throw Error(ErrorCode::kNotACover, l.name(c) + " is not a lower cover of " + l.name(w));
  UniqueJi out;
  for (ElementId p : l.join_irreducibles()) {
    if (l.leq(p, w) && !l.leq(p, c)) out.all.push_back(p);
  }
  out.minimal = minimal_ji_separators(l, w, c);
  if (out.all.size() == 1) out.j = out.all.front();
  return out;
}

ExtremePointJoin extreme_point_join(const FiniteLattice& l, ElementId w) {
  const std::vector<ElementId> ji = ji_below(l, w);
  ExtremePointJoin out;
  for (std::size_t i = 0; i < ji.size(); ++i) {
    if (l.less(join_without(l, ji, i), w)) out.extreme.push_back(ji[i]);
  }
  out.joins_to_w = l.join_set(out.extreme) == w;
  return out;
}

std::vector<std::vector<ElementId>> irredundant_ji_decompositions(const FiniteLattice& l, ElementId w,
                                                                  std::size_t limit) {
  const std::vector<ElementId> ji = ji_below(l, w);
  if (ji.size() > 30) throw Error(ErrorCode::kBoundExceeded, "too many join irreducibles below " + l.name(w));
  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> chosen;
  // Irredundant sets are antichains; a set already joining to w is not extended.
  std::function<void(std::size_t, ElementId)> grow = [&](std::size_t start, ElementId acc) {
    if (acc == w) {
      if (is_irredundant(l, chosen, w)) out.push_back(chosen);
      return;
    }
    for (std::size_t i = start; i < ji.size() && out.size() < limit; ++i) {
      if (!is_antichain_extension(l, chosen, ji[i])) continue;
      chosen.push_back(ji[i]);
      grow(i + 1, l.join(acc, ji[i]));
      chosen.pop_back();
    }
  };
  grow(0, l.bottom());
  return out;
}

PropertyReport scs_geom_report(const FiniteLattice& l) {
  PropertyReport r;
  auto payload = [&](std::string kind, std::vector<ElementId> ids, std::string text) {
    return WitnessPayload{std::move(kind), std::move(ids), std::move(text)};
  };

  // (1), (2) on the standard representation over Ji(L).
  const ClosureSystem rep = standard_representation(l);
  const auto& ji = l.join_irreducibles();
  auto element_of = [&](const Bitset& closed) {
    ElementId acc = l.bottom();
    for_each_bit(closed, [&](std::size_t i) { acc = l.join(acc, ji[i]); });
    return acc;
  };
  if (auto aep_result = aep(rep); aep_result) {
    r.flags[0] = true;
  } else {
    const auto& wit = *aep_result.witness;
    const ElementId a = element_of(wit.closed);
    r.witnesses[0] = payload("aep", {a, ji[wit.x], ji[wit.y]},
                             "A=" + l.name(a) + " x=" + l.name(ji[wit.x]) + " y=" + l.name(ji[wit.y]));
  }
  if (auto cov = cover_singleton(rep); cov) {
    r.flags[1] = true;
  } else {
    const ElementId lo = element_of(cov.witness->lower);
    const ElementId hi = element_of(cov.witness->upper);
    r.witnesses[1] = payload("cover", {lo, hi}, l.name(lo) + " < " + l.name(hi) + " differs in " +
                                                    std::to_string((cov.witness->upper - cov.witness->lower).count()) +
                                                    " join irreducibles");
  }

  // (3)
  const auto sd = is_sd_join(l);
  const auto lsm = is_lower_semimodular(l);
  r.sd_join = sd.holds();
  r.lower_semimodular = lsm.holds();
  r.flags[2] = r.sd_join && r.lower_semimodular;
  if (!sd) {
    const auto& s = *sd.witness;
    r.witnesses[2] = payload("sd_join", {s.w, s.x, s.y, s.z},
                             "w=" + l.name(s.w) + " x=" + l.name(s.x) + " y=" + l.name(s.y) + " z=" + l.name(s.z));
  } else if (!lsm) {
    const auto& t = *lsm.witness;
    r.witnesses[2] = payload("lower_semimodular", {t.x, t.y, t.z},
                             l.name(t.x) + " < " + l.name(t.y) + " met with " + l.name(t.z));
  }

  // (4)
  r.flags[3] = true;
  for (ElementId w = 0; w < l.size() && r.flags[3]; ++w) {
    const auto ex = extreme_point_join(l, w);
    if (!ex.joins_to_w) {
      r.flags[3] = false;
      std::vector<ElementId> ids{w};
      ids.insert(ids.end(), ex.extreme.begin(), ex.extreme.end());
      r.witnesses[3] = payload("extreme_point_join", ids, "Ex(" + l.name(w) + ")=" + names_of(l, ex.extreme));
    }
  }

  // (5): uniqueness, then canonicity against every irredundant JI
  // representation, which covers all representations once each member is
  // replaced by the join irreducibles below it.
  r.flags[4] = true;
  for (ElementId w = 0; w < l.size() && r.flags[4]; ++w) {
    const auto decs = irredundant_ji_decompositions(l, w, 2);
    if (decs.size() != 1) {
      r.flags[4] = false;
      std::vector<ElementId> ids{w};
      std::string text = l.name(w) + " has " + std::to_string(decs.size()) + " irredundant decompositions";
      for (const auto& d : decs) {
        ids.insert(ids.end(), d.begin(), d.end());
        text += " " + names_of(l, d);
      }
      r.witnesses[4] = payload("irredundant_decomposition", ids, text);
      break;
    }
    for (const auto& other : irredundant_ji_decompositions(l, w)) {
      if (!refines(l, decs.front(), other)) {
        r.flags[4] = false;
        r.witnesses[4] = payload("not_canonical", {w}, names_of(l, decs.front()) + " does not refine " + names_of(l, other));
        break;
      }
    }
  }

  // (6)
  r.flags[5] = true;
  for (const auto& [c, w] : l.cover_pairs()) {
    const auto u = unique_min_ji(l, w, c);
    if (!u.j) {
      r.flags[5] = false;
      std::vector<ElementId> ids{w, c};
      ids.insert(ids.end(), u.all.begin(), u.all.end());
      r.witnesses[5] = payload("unique_j", ids, l.name(c) + " < " + l.name(w) + " separated by " + names_of(l, u.all));
      break;
    }
  }

  // (7)
  if (auto ld = is_locally_distributive(l); ld) {
    r.flags[6] = true;
  } else {
    const ElementId x = *ld.witness;
    const ElementId m = mu(l, x);
    r.witnesses[6] = payload("locally_distributive", {x, m}, "[" + l.name(m) + ", " + l.name(x) + "] is not distributive");
  }

  if (auto at = is_atomistic(l); at) {
    r.atomistic = true;
  } else {
    r.atomistic_witness = payload("atomistic", {*at.witness}, l.name(*at.witness) + " is not a join of atoms");
  }
  if (auto dist = is_distributive(l); dist) {
    r.distributive = true;
  } else {
    const auto& t = *dist.witness;
    r.distributive_witness = payload("distributive", {t.x, t.y, t.z}, "x=" + l.name(t.x) + " y=" + l.name(t.y) + " z=" + l.name(t.z));
  }

  r.agreement = std::all_of(r.flags.begin(), r.flags.end(), [&](bool f) { return f == r.flags[0]; });
  const bool all_true = std::all_of(r.flags.begin(), r.flags.end(), [](bool f) { return f; });
  r.atomistic_sd_forces_all = !(r.atomistic && r.sd_join) || all_true;
  return r;
}

}  // namespace cgeom
