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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "cgeom/error.hpp"
#include "cgeom/explorer.hpp"

using namespace cgeom;

namespace {

std::set<std::string> elements(const Window& w) {
  std::set<std::string> out;
  for (const WindowNode& n : w.nodes) out.insert(n.element);
  return out;
}

Verdict check(const LazyLattice& l, std::size_t depth, std::size_t budget, const std::string& property,
              const std::vector<LazyElement>& roots = {}) {
  return window_check(l, explore(l, depth, budget, roots), parse_property(property));
}

// Claims a cover that is not below its element.
class Broken final : public LazyLattice {
 public:
  std::string name() const override { return "broken"; }
  LazyElement top() const override { return "x"; }
  CoverList lower_covers(const LazyElement& e, std::size_t) const override {
    if (e == "x") return {{"y"}, false};
    return {{"x"}, false};
  }
  bool has_meet() const override { return true; }
  std::optional<LazyElement> meet(const LazyElement& a, const LazyElement& b) const override {
    if (a == b) return a;
    return std::string("y");
  }
};

// Answers differently on every call.
class Flaky final : public LazyLattice {
 public:
  std::string name() const override { return "flaky"; }
  LazyElement top() const override { return "x"; }
  CoverList lower_covers(const LazyElement&, std::size_t) const override {
    return {{"y" + std::to_string(calls_++)}, false};
  }

 private:
  mutable int calls_ = 0;
};

// No meet oracle.
class Meetless final : public LazyLattice {
 public:
  std::string name() const override { return "meetless"; }
  LazyElement top() const override { return "1"; }
  CoverList lower_covers(const LazyElement& e, std::size_t) const override {
    if (e == "1") return {{"0"}, false};
    return {};
  }
};

}  // namespace

TEST_CASE("lattice K oracles and windows") {
  const auto k = named_instance("lattice_K");
  CHECK(k->lower_covers("1", 4).covers == std::vector<LazyElement>{"a1", "b"});
  CHECK(k->lower_covers("a3", 4).covers == std::vector<LazyElement>{"a4"});
  CHECK(k->lower_covers("b", 4).covers == std::vector<LazyElement>{"0"});
  const Window w = explore(*k, 2, 4);
  CHECK(elements(w) == std::set<std::string>{"1", "a1", "b", "a2", "0"});
  std::vector<std::string> frontier;
  for (std::size_t i = 0; i < w.nodes.size(); ++i)
    if (w.is_frontier(i) || w.nodes[i].oracle.truncated) frontier.push_back(w.nodes[i].element);
  CHECK(frontier == std::vector<std::string>{"a2"});
  CHECK(explore(*k, 1, 1).nodes.size() == 2);
}

TEST_CASE("omega system oracles") {
  const auto om = named_instance("omega_zero_or_finite");
  const Window w = explore(*om, 1, 3);
  REQUIRE(w.nodes.size() == 4);
  CHECK(w.nodes[0].oracle.truncated);
  CHECK(w.nodes[0].oracle.covers == std::vector<LazyElement>{"N-{1}", "N-{2}", "N-{3}"});
  CHECK(om->lower_covers(omega_finite_set({0, 1, 2}), 8).covers ==
        std::vector<LazyElement>{"{1,2}", "{0,2}", "{0,1}"});
  CHECK(om->lower_covers("{0}", 8).covers == std::vector<LazyElement>{"{}"});
  for (std::size_t k = 1; k <= 20; ++k) {
    std::vector<std::size_t> fk;
    for (std::size_t i = 1; i <= k; ++i) fk.push_back(i);
    CHECK(om->meet("{0}", omega_finite_set(fk)) == "{}");
  }
  CHECK(om->meet("N-{2}", "{0,2,5}") == "{0,5}");
  CHECK(om->meet("N-{2}", "N-{3}") == "N-{2,3}");
  CHECK_THROWS_AS(om->lower_covers("N-{0}", 2), Error);
}

TEST_CASE("omega system covers are singletons") {
  const auto om = named_instance("omega_zero_or_finite");
  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t b = 1; b <= 8; ++b) {
      CHECK(check(*om, d, b, "cover_singleton").status == VerdictStatus::kHoldsInWindow);
      CHECK(check(*om, d, b, "cover_singleton", {"{0,1,2}"}).status == VerdictStatus::kHoldsInWindow);
    }
}

TEST_CASE("lattice K is spatial but not strongly spatial in every window") {
  const auto k = named_instance("lattice_K");
  for (std::size_t d = 1; d <= 10; ++d) {
    const Verdict v = check(*k, d, 4, "strongly_spatial_at:top,b");
    CHECK(v.status == VerdictStatus::kInconclusive);
    CHECK(v.witness.empty());
    CHECK(check(*k, d, 4, "spatial").status == VerdictStatus::kHoldsInWindow);
  }
  // Where a minimal element exists it is found.
  CHECK(check(*k, 3, 4, "strongly_spatial_at:top,a1").status == VerdictStatus::kHoldsInWindow);
  CHECK(check(*k, 3, 4, "strongly_spatial_at:a1,top").status == VerdictStatus::kHoldsInWindow);
}

TEST_CASE("doubled atom") {
  const auto d = named_instance("chain_dual_times_two_doubled_atom");
  CHECK(d->lower_covers("(0,1)", 4).covers == std::vector<LazyElement>{"(1,1)", "(0,0)"});
  CHECK(d->lower_covers("t_hi", 4).covers == std::vector<LazyElement>{"t_lo"});
  CHECK(d->meet("t_hi", "(3,0)") == "(w,0)");
  CHECK(d->meet("t_lo", "(3,1)") == "t_lo");
  CHECK(d->meet("(2,1)", "(4,0)") == "(4,0)");
  CHECK(d->meet("(2,0)", "(4,1)") == "(4,0)");
  // From the top alone the window never reaches the doubled atom.
  CHECK(check(*d, 6, 4, "lower_semimodular").status == VerdictStatus::kInconclusive);
  const Verdict v = check(*d, 2, 4, "lower_semimodular", {"t_hi"});
  REQUIRE(v.status == VerdictStatus::kFailsWithWitness);
  REQUIRE(v.witness.size() == 3);
  // a < b is a cover, c arbitrary; a^c must fail to be covered by b^c.
  CHECK(d->lower_covers(v.witness[1], 8).covers.size() >= 1);
  const LazyElement lo = *d->meet(v.witness[0], v.witness[2]);
  const LazyElement hi = *d->meet(v.witness[1], v.witness[2]);
  const auto covers = d->lower_covers(hi, 8);
  CHECK_FALSE(covers.truncated);
  CHECK(std::find(covers.covers.begin(), covers.covers.end(), lo) == covers.covers.end());
  CHECK(lo != hi);
}

TEST_CASE("trivial instance") {
  const auto t = named_instance("trivial");
  for (const char* p : {"cover_singleton", "unique_j", "lower_semimodular", "spatial", "strongly_spatial_at:top,top"}) {
    CHECK(check(*t, 1, 1, p).status == VerdictStatus::kHoldsInWindow);
  }
}

TEST_CASE("enlarging a window never flips a decided verdict") {
  for (const char* name : {"lattice_K", "omega_zero_or_finite", "chain_dual_times_two_doubled_atom", "trivial"}) {
    const auto l = named_instance(name);
    for (const char* p : {"cover_singleton", "unique_j", "lower_semimodular", "spatial", "strongly_spatial_at:top,b"}) {
      if (std::string(name) != "lattice_K" && std::string(p).starts_with("strongly")) continue;
      for (std::size_t d = 1; d <= 5; ++d)
        for (std::size_t b = 1; b <= 4; ++b) {
          const VerdictStatus small = check(*l, d, b, p).status;
          if (small == VerdictStatus::kInconclusive) continue;
          INFO(name, " ", p, " depth ", d, " budget ", b);
          CHECK(check(*l, d + 1, b, p).status != (small == VerdictStatus::kHoldsInWindow ? VerdictStatus::kFailsWithWitness : VerdictStatus::kHoldsInWindow));
          CHECK(check(*l, d, b + 1, p).status != (small == VerdictStatus::kHoldsInWindow ? VerdictStatus::kFailsWithWitness : VerdictStatus::kHoldsInWindow));
        }
    }
  }
}

TEST_CASE("lattice K violations found once both branches are visible") {
  const auto k = named_instance("lattice_K");
  CHECK(check(*k, 1, 1, "lower_semimodular").status == VerdictStatus::kInconclusive);
  CHECK(check(*k, 1, 2, "lower_semimodular").status == VerdictStatus::kFailsWithWitness);
  CHECK(check(*k, 2, 2, "unique_j").status == VerdictStatus::kFailsWithWitness);
  CHECK(check(*k, 2, 2, "cover_singleton").status == VerdictStatus::kFailsWithWitness);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(named_instance("nope"), Error);
  CHECK_THROWS_AS(explore(*named_instance("lattice_K"), 0, 1), Error);
  CHECK_THROWS_AS(explore(*named_instance("lattice_K"), 1, 0), Error);
  bool inconsistent = false;
  try {
    explore(Broken(), 3, 2);
  } catch (const Error& e) {
    inconsistent = e.code() == ErrorCode::kOracleInconsistent;
  }
  CHECK(inconsistent);
  inconsistent = false;
  try {
    explore(Flaky(), 1, 2);
  } catch (const Error& e) {
    inconsistent = e.code() == ErrorCode::kOracleInconsistent;
  }
  CHECK(inconsistent);
  const Meetless m;
  const Window w = explore(m, 1, 1);
  bool needs_meet = false;
  try {
    window_check(m, w, parse_property("lower_semimodular"));
  } catch (const Error& e) {
    needs_meet = e.code() == ErrorCode::kPropertyNeedsMeetOracle;
  }
  CHECK(needs_meet);
  CHECK(window_check(m, w, parse_property("cover_singleton")).status == VerdictStatus::kHoldsInWindow);
  CHECK_THROWS_AS(parse_property("modular"), Error);
  CHECK_THROWS_AS(parse_property("strongly_spatial_at:1"), Error);
}
