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

#include "cgeom/explorer.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cstdint>
#include <deque>
#include <set>

#include "cgeom/error.hpp"

namespace cgeom {

namespace {

CoverList capped(std::vector<LazyElement> all, std::size_t budget) {
  CoverList out;
  if (all.size() > budget) {
    all.resize(budget);
    out.truncated = true;
  }
  out.covers = std::move(all);
  return out;
}

std::size_t parse_number(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "bad number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::size_t> parse_braced(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(ErrorCode::kParseError, "bad set label '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_number(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string braced(const std::set<std::size_t>& members) {
  std::string out = "{";
  for (auto it = members.begin(); it != members.end(); ++it) {
    if (it != members.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

// K: 0 < ... < a2 < a1 < 1 and 0 < b < 1.
class LatticeK final : public LazyLattice {
 public:
  std::string name() const override { return "lattice_K"; }
  LazyElement top() const override { return "1"; }

  CoverList lower_covers(const LazyElement& e, std::size_t budget) const override {
    if (e == "1") return capped({"a1", "b"}, budget);
    if (e == "b") return capped({"0"}, budget);
    if (e == "0") return {};
    return capped({"a" + std::to_string(chain_index(e) + 1)}, budget);
  }

  bool has_meet() const override { return true; }

  std::optional<LazyElement> meet(const LazyElement& x, const LazyElement& y) const override {
    if (x == y || y == "1") return x;
    if (x == "1") return y;
    if (x == "0" || y == "0" || x == "b" || y == "b") return "0";
    return chain_index(x) > chain_index(y) ? x : y;
  }

 private:
  static std::size_t chain_index(const LazyElement& e) {
    if (e.size() < 2 || e[0] != 'a') throw Error(ErrorCode::kParseError, "not an element of K: " + e);
    const std::size_t i = parse_number(std::string_view(e).substr(1));
    if (i == 0) throw Error(ErrorCode::kParseError, "chain of K starts at a1");
    return i;
  }
};

// Closed sets of omega: those containing 0 or finite. Labels are "{1,2}" for
// finite sets and "N-{3,5}" for omega minus a finite set not containing 0.
class OmegaZeroOrFinite final : public LazyLattice {
 public:
  struct Set {
    bool cofinite = false;
    std::set<std::size_t> items;  // members if finite, missing elements if cofinite
  };

  std::string name() const override { return "omega_zero_or_finite"; }
  LazyElement top() const override { return "N-{}"; }

  CoverList lower_covers(const LazyElement& e, std::size_t budget) const override {
    const Set s = parse(e);
    std::vector<LazyElement> out;
    if (!s.cofinite) {
      for (std::size_t x : s.items) {
        Set t = s;
        t.items.erase(x);
        out.push_back(format(t));
      }
      return capped(std::move(out), budget);
    }
    // Infinite fan: omega-set minus x for each nonzero x still present.
    CoverList result;
    for (std::size_t x = 1; out.size() < budget; ++x) {
      if (s.items.contains(x)) continue;
      Set t = s;
      t.items.insert(x);
      out.push_back(format(t));
    }
    result.covers = std::move(out);
    result.truncated = true;
    return result;
  }

  bool has_meet() const override { return true; }

  std::optional<LazyElement> meet(const LazyElement& x, const LazyElement& y) const override {
    const Set a = parse(x);
    const Set b = parse(y);
    Set out;
    if (a.cofinite && b.cofinite) {
      out.cofinite = true;
      out.items = a.items;
      out.items.insert(b.items.begin(), b.items.end());
    } else if (a.cofinite || b.cofinite) {
      const Set& fin = a.cofinite ? b : a;
      const Set& cof = a.cofinite ? a : b;
      for (std::size_t m : fin.items) {
        if (!cof.items.contains(m)) out.items.insert(m);
      }
    } else {
      for (std::size_t m : a.items) {
        if (b.items.contains(m)) out.items.insert(m);
      }
    }
    return format(out);
  }

  std::optional<std::size_t> difference_size(const LazyElement& lower, const LazyElement& upper) const override {
    const Set lo = parse(lower);
    const Set hi = parse(upper);
    std::size_t count = 0;
    if (hi.cofinite && !lo.cofinite) return SIZE_MAX;
    if (hi.cofinite) {
      for (std::size_t m : lo.items) count += hi.items.contains(m) ? 0 : 1;
    } else if (lo.cofinite) {
      for (std::size_t m : hi.items) count += lo.items.contains(m) ? 1 : 0;
    } else {
      for (std::size_t m : hi.items) count += lo.items.contains(m) ? 0 : 1;
    }
    return count;
  }

  static Set parse(const LazyElement& e) {
    Set s;
    std::string_view text = e;
    if (text.starts_with("N-")) {
      s.cofinite = true;
      text.remove_prefix(2);
    }
    for (std::size_t m : parse_braced(text)) s.items.insert(m);
    if (s.cofinite && s.items.contains(0)) {
      throw Error(ErrorCode::kParseError, "infinite closed sets contain 0: " + e);
    }
    return s;
  }

  static LazyElement format(const Set& s) { return (s.cofinite ? "N-" : "") + braced(s.items); }
};

// Dual omega-chain times 2 with its atom (w,1) replaced by t_lo < t_hi.
// Labels "(k,e)" for finite depth k, "(w,0)" for the bottom, "t_lo", "t_hi".
class DoubledAtom final : public LazyLattice {
 public:
  std::string name() const override { return "chain_dual_times_two_doubled_atom"; }
  LazyElement top() const override { return "(0,1)"; }

  CoverList lower_covers(const LazyElement& e, std::size_t budget) const override {
    const Point p = parse(e);
    if (p.sub == 2) return capped({"t_lo"}, budget);
    if (p.sub == 1) return capped({"(w,0)"}, budget);
    if (p.depth == kOmega) return {};
    if (p.level == 1) return capped({format({p.depth + 1, 1, 0}), format({p.depth, 0, 0})}, budget);
    return capped({format({p.depth + 1, 0, 0})}, budget);
  }

  bool has_meet() const override { return true; }

  std::optional<LazyElement> meet(const LazyElement& x, const LazyElement& y) const override {
    const Point a = parse(x);
    const Point b = parse(y);
    if (leq(a, b)) return x;
    if (leq(b, a)) return y;
    if (a.sub || b.sub) return "(w,0)";
    return format({std::max(a.depth, b.depth), std::min(a.level, b.level), 0});
  }

 private:
  static constexpr std::size_t kOmega = SIZE_MAX;

  struct Point {
    std::size_t depth;
    int level;
    int sub;  // 1 = t_lo, 2 = t_hi, 0 otherwise
  };

  static bool leq(const Point& a, const Point& b) {
    if (a.sub && b.sub) return a.sub <= b.sub;
    // Both copies of the atom sit where (w,1) sat.
    return a.depth >= b.depth && a.level <= b.level;
  }

  static Point parse(const LazyElement& e) {
    if (e == "t_lo") return {kOmega, 1, 1};
    if (e == "t_hi") return {kOmega, 1, 2};
    if (e.size() < 5 || e.front() != '(' || e.back() != ')') throw Error(ErrorCode::kParseError, "bad element " + e);
    const auto comma = e.find(',');
    const std::string_view depth = std::string_view(e).substr(1, comma - 1);
    const std::string_view level = std::string_view(e).substr(comma + 1, e.size() - comma - 2);
    Point p{depth == "w" ? kOmega : parse_number(depth), static_cast<int>(parse_number(level)), 0};
    if (p.level > 1 || (p.depth == kOmega && p.level == 1)) throw Error(ErrorCode::kParseError, "bad element " + e);
    return p;
  }

  static LazyElement format(const Point& p) {
    return "(" + (p.depth == kOmega ? std::string("w") : std::to_string(p.depth)) + "," + std::to_string(p.level) + ")";
  }
};

class Trivial final : public LazyLattice {
 public:
  std::string name() const override { return "trivial"; }
  LazyElement top() const override { return "0"; }
  CoverList lower_covers(const LazyElement&, std::size_t) const override { return {}; }
  bool has_meet() const override { return true; }
  std::optional<LazyElement> meet(const LazyElement& x, const LazyElement&) const override { return x; }
};

// Order facts about window elements: meet oracle when present, otherwise
// reachability along the cover lists the window has seen.
class WindowOrder {
 public:
  WindowOrder(const LazyLattice& lattice, const Window& window) : lattice_(lattice), window_(window) {}

  bool leq(const LazyElement& x, const LazyElement& y) const {
    if (x == y) return true;
    if (lattice_.has_meet()) return lattice_.meet(x, y) == x;
    std::deque<LazyElement> queue{y};
    std::set<LazyElement> seen{y};
    while (!queue.empty()) {
      const LazyElement cur = queue.front();
      queue.pop_front();
      auto node = window_.find(cur);
      if (!node) continue;
      for (const LazyElement& c : window_.nodes[*node].oracle.covers) {
        if (c == x) return true;
        if (seen.insert(c).second) queue.push_back(c);
      }
    }
    return false;
  }

 private:
  const LazyLattice& lattice_;
  const Window& window_;
};

}  // namespace

std::optional<std::size_t> Window::find(const LazyElement& e) const {
  auto it = index.find(e);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool Window::is_frontier(std::size_t node) const {
  const WindowNode& n = nodes.at(node);
  return !n.expanded && !n.oracle.covers.empty();
}

bool Window::is_join_irreducible(std::size_t node) const {
  const WindowNode& n = nodes.at(node);
  return !n.oracle.truncated && n.oracle.covers.size() == 1;
}

std::vector<std::pair<std::size_t, std::size_t>> Window::cover_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].expanded) continue;
    for (const LazyElement& c : nodes[i].oracle.covers) out.emplace_back(index.at(c), i);
  }
  return out;
}

Window explore(const LazyLattice& lattice, std::size_t depth, std::size_t budget,
               const std::vector<LazyElement>& extra_roots) {
  if (depth == 0 || budget == 0) throw Error(ErrorCode::kPreconditionFailed, "explore needs depth >= 1 and budget >= 1");
  Window w;
  w.depth = depth;
  w.budget = budget;
  auto add = [&](const LazyElement& e, std::size_t level) {
    if (w.index.contains(e)) return;
    w.index[e] = w.nodes.size();
    w.nodes.push_back({e, level, {}, false});
  };
  add(lattice.top(), 0);
  for (const LazyElement& r : extra_roots) add(r, 0);

  for (std::size_t i = 0; i < w.nodes.size(); ++i) {
    const LazyElement e = w.nodes[i].element;
    CoverList first = lattice.lower_covers(e, budget);
    const CoverList again = lattice.lower_covers(e, budget);
    if (first.covers != again.covers || first.truncated != again.truncated) {
      throw Error(ErrorCode::kOracleInconsistent, "lower covers of " + e + " changed on re-query");
    }
    std::set<LazyElement> distinct(first.covers.begin(), first.covers.end());
    if (distinct.size() != first.covers.size()) {
      throw Error(ErrorCode::kOracleInconsistent, "repeated lower cover of " + e);
    }
    for (const LazyElement& c : first.covers) {
      bool below = c != e;
      if (below && lattice.has_meet()) below = lattice.meet(c, e) == c;
      if (!below) throw Error(ErrorCode::kOracleInconsistent, c + " is not strictly below " + e);
    }
    const std::size_t level = w.nodes[i].level;
    w.nodes[i].oracle = std::move(first);
    if (level < depth) {
      w.nodes[i].expanded = true;
      const std::vector<LazyElement> covers = w.nodes[i].oracle.covers;
      for (const LazyElement& c : covers) add(c, level + 1);
    }
  }
  return w;
}

std::string property_name(WindowProperty property) {
  switch (property) {
    case WindowProperty::kCoverSingleton: return "cover_singleton";
    case WindowProperty::kUniqueJ: return "unique_j";
    case WindowProperty::kLowerSemimodular: return "lower_semimodular";
    case WindowProperty::kStronglySpatialAt: return "strongly_spatial_at";
    case WindowProperty::kSpatial: return "spatial";
  }
  return "unknown";
}

PropertyQuery parse_property(std::string_view text) {
  PropertyQuery q;
  for (auto p : {WindowProperty::kCoverSingleton, WindowProperty::kUniqueJ, WindowProperty::kLowerSemimodular,
                 WindowProperty::kSpatial}) {
    if (text == property_name(p)) {
      q.property = p;
      return q;
    }
  }
  constexpr std::string_view prefix = "strongly_spatial_at:";
  if (text.starts_with(prefix)) {
    text.remove_prefix(prefix.size());
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorCode::kParseError, "strongly_spatial_at needs A,B");
    q.property = WindowProperty::kStronglySpatialAt;
    q.a = std::string(text.substr(0, comma));
    q.b = std::string(text.substr(comma + 1));
    return q;
  }
  throw Error(ErrorCode::kParseError, "unknown property '" + std::string(text) + "'");
}

std::string status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kHoldsInWindow: return "holds_in_window";
    case VerdictStatus::kFailsWithWitness: return "fails_with_witness";
    case VerdictStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

Verdict window_check(const LazyLattice& lattice, const Window& window, const PropertyQuery& query) {
  Verdict v;
  v.property = property_name(query.property);
  v.depth = window.depth;
  v.budget = window.budget;
  const bool needs_meet =
      query.property == WindowProperty::kLowerSemimodular || query.property == WindowProperty::kStronglySpatialAt;
  if (needs_meet && !lattice.has_meet()) {
    throw Error(ErrorCode::kPropertyNeedsMeetOracle, v.property + " needs a meet oracle on " + lattice.name());
  }
  const WindowOrder order(lattice, window);
  auto fail = [&](std::vector<LazyElement> witness, std::string note) {
    v.status = VerdictStatus::kFailsWithWitness;
    v.witness = std::move(witness);
    v.note = std::move(note);
    return v;
  };
  const auto edges = window.cover_edges();
  const auto& nodes = window.nodes;
  // Nothing below the window is left unseen; absence of a violation is then final.
  const bool complete = std::all_of(nodes.begin(), nodes.end(), [](const WindowNode& n) {
    return !n.oracle.truncated && (n.expanded || n.oracle.covers.empty());
  });
  auto no_violation = [&](std::string note) {
    v.status = complete ? VerdictStatus::kHoldsInWindow : VerdictStatus::kInconclusive;
    v.note = complete ? std::move(note) : "no violation in the window, but covers were cut off";
    return v;
  };

  // Window join irreducibles below w and not below c; each is a genuine
  // join irreducible, so two of them refute uniqueness outright.
  auto separators = [&](const LazyElement& w, const LazyElement& c) {
    std::vector<LazyElement> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const LazyElement& j = nodes[i].element;
      if (window.is_join_irreducible(i) && order.leq(j, w) && !order.leq(j, c)) out.push_back(j);
    }
    return out;
  };

  switch (query.property) {
    case WindowProperty::kCoverSingleton: {
      const bool set_valued = lattice.difference_size(lattice.top(), lattice.top()).has_value();
      for (const auto& [lo, hi] : edges) {
        const LazyElement& a = nodes[lo].element;
        const LazyElement& b = nodes[hi].element;
        if (set_valued) {
          const std::size_t d = *lattice.difference_size(a, b);
          if (d != 1) return fail({a, b}, "cover difference has " + (d == SIZE_MAX ? std::string("infinitely many") : std::to_string(d)) + " elements");
        } else if (auto sep = separators(b, a); sep.size() >= 2) {
          return fail({a, b, sep[0], sep[1]}, "standard representation: two join irreducibles in the cover difference");
        }
      }
      if (!set_valued) return no_violation("checked on window join irreducibles");
      // Cover differences are facts about each explored cover on their own.
      v.status = VerdictStatus::kHoldsInWindow;
      v.note = "every explored cover differs in one element";
      return v;
    }
    case WindowProperty::kUniqueJ: {
      bool missing = false;
      for (const auto& [lo, hi] : edges) {
        const auto sep = separators(nodes[hi].element, nodes[lo].element);
        if (sep.size() >= 2) return fail({nodes[hi].element, nodes[lo].element, sep[0], sep[1]}, "two separating join irreducibles");
        if (sep.empty()) missing = true;
      }
      if (missing) {
        v.status = VerdictStatus::kInconclusive;
        v.note = "some cover has no separating join irreducible inside the window";
        return v;
      }
      return no_violation("");
    }
    case WindowProperty::kLowerSemimodular: {
      bool unknown = false;
      for (const auto& [lo, hi] : edges) {
        for (const WindowNode& cn : nodes) {
          const LazyElement m_lo = *lattice.meet(nodes[lo].element, cn.element);
          const LazyElement m_hi = *lattice.meet(nodes[hi].element, cn.element);
          if (m_lo == m_hi) continue;
          if (auto d = lattice.difference_size(m_lo, m_hi); d && *d == 1) continue;
          const CoverList covers = lattice.lower_covers(m_hi, window.budget);
          if (std::find(covers.covers.begin(), covers.covers.end(), m_lo) != covers.covers.end()) continue;
          if (!covers.truncated) {
            return fail({nodes[lo].element, nodes[hi].element, cn.element},
                        m_lo + " is not covered by " + m_hi);
          }
          unknown = true;
        }
      }
      if (unknown) {
        v.status = VerdictStatus::kInconclusive;
        v.note = "some meet pair could not be decided within the budget";
        return v;
      }
      return no_violation("");
    }
    case WindowProperty::kStronglySpatialAt: {
      const LazyElement a = query.a == "top" ? lattice.top() : query.a;
      const LazyElement b = query.b == "top" ? lattice.top() : query.b;
      if (order.leq(a, b)) {
        v.status = VerdictStatus::kHoldsInWindow;
        v.note = "vacuous: " + a + " <= " + b;
        return v;
      }
      // p is minimal with p <= a, p not <= b iff every lower cover of p lies below b.
      for (const WindowNode& n : nodes) {
        const LazyElement& p = n.element;
        if (!order.leq(p, a) || order.leq(p, b) || n.oracle.truncated) continue;
        const bool minimal = std::all_of(n.oracle.covers.begin(), n.oracle.covers.end(),
                                         [&](const LazyElement& d) { return order.leq(d, b); });
        if (minimal) {
          v.status = VerdictStatus::kHoldsInWindow;
          v.note = "minimal element " + p;
          return v;
        }
      }
      v.status = VerdictStatus::kInconclusive;
      v.note = "no minimal element inside the window; candidates continue below it";
      return v;
    }
    case WindowProperty::kSpatial: {
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (window.is_join_irreducible(i)) continue;
        const LazyElement& w = nodes[i].element;
        std::vector<LazyElement> below;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          if (window.is_join_irreducible(j) && order.leq(nodes[j].element, w)) below.push_back(nodes[j].element);
        }
        // w must be the least window upper bound of `below`.
        bool least = true;
        for (const WindowNode& u : nodes) {
          const bool upper = std::all_of(below.begin(), below.end(), [&](const LazyElement& j) { return order.leq(j, u.element); });
          if (upper && !order.leq(w, u.element)) least = false;
        }
        if (!least) {
          v.status = VerdictStatus::kInconclusive;
          v.note = w + " is not the join of the window join irreducibles below it";
          return v;
        }
      }
      v.status = VerdictStatus::kHoldsInWindow;
      return v;
    }
  }
  return v;
}

std::unique_ptr<LazyLattice> named_instance(std::string_view name) {
  if (name == "lattice_K") return std::make_unique<LatticeK>();
  if (name == "omega_zero_or_finite") return std::make_unique<OmegaZeroOrFinite>();
  if (name == "chain_dual_times_two_doubled_atom") return std::make_unique<DoubledAtom>();
  if (name == "trivial") return std::make_unique<Trivial>();
  throw Error(ErrorCode::kUnknownInstance, "no lazy instance named '" + std::string(name) + "'");
}

LazyElement omega_finite_set(const std::vector<std::size_t>& members) {
  return braced(std::set<std::size_t>(members.begin(), members.end()));
}

}  // namespace cgeom
