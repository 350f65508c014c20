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

#include <vector>

#include "cgeom/closure.hpp"
#include "cgeom/error.hpp"
#include "cgeom/generators.hpp"
#include "cgeom/geometry.hpp"
#include "cgeom/lattice.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cgeom;

namespace {

std::vector<std::uint64_t> masks(const ClosureSystem& cs) {
  std::vector<std::uint64_t> out;
  for (const Bitset& b : cs.closed_sets()) out.push_back(b.to_ulong());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("convex subsets") {
  CHECK(co_poset(FinitePoset::antichain(2)).closed_sets().size() == 4);
  const ClosureSystem c3 = co_poset(FinitePoset::chain(3));
  CHECK(c3.closed_sets().size() == 7);
  CHECK_FALSE(c3.is_closed(c3.from_indices({0, 2})));
  CHECK(c3.close(c3.from_indices({0, 2})) == c3.from_indices({0, 1, 2}));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(co_poset(FinitePoset::antichain(n)).closed_sets().size() == (1u << n));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const FinitePoset& p : all_posets(n)) {
      auto expected = oracle::convex_subsets(test_support::to_matrix(p));
      std::sort(expected.begin(), expected.end());
      CHECK(masks(co_poset(p)) == expected);
    }
  }
}

TEST_CASE("hull operator and extreme points of convex subsets") {
  for (const FinitePoset& p : all_posets(4)) {
    const ClosureSystem cs = co_poset(p);
    for (std::uint64_t s = 0; s < (1u << p.size()); ++s) {
      Bitset a(p.size(), s);
      const Bitset hull = cs.close(a);
      CHECK(cs.close(hull) == hull);
      CHECK(extreme_points(cs, hull).is_subset_of(a));
    }
  }
}

TEST_CASE("subsemilattices") {
  const MeetSemilattice one = MeetSemilattice::from_table({"0"}, {{0}});
  CHECK(sub_meet(one).closed_sets().size() == 2);
  const ClosureSystem fan = sub_meet(test_support::fan());
  CHECK(fan.closed_sets().size() == 7);
  CHECK_FALSE(fan.is_closed(fan.from_indices({1, 2})));
  const MeetSemilattice c3 = MeetSemilattice::from_poset(FinitePoset::chain(3));
  CHECK(sub_meet(c3).closed_sets().size() == 8);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const MeetSemilattice& s : all_meet_semilattices(n)) {
      auto expected = oracle::meet_closed_subsets(s.table());
      std::sort(expected.begin(), expected.end());
      CHECK(masks(sub_meet(s)) == expected);
    }
  }
  CHECK_THROWS_AS(MeetSemilattice::from_table({"a", "b"}, {{0, 1}, {0, 1}}), Error);
  const std::vector<IdPair> vee{{1, 0}, {2, 0}};
  CHECK_THROWS_AS(MeetSemilattice::from_poset(FinitePoset::build({"top", "a", "b"}, vee)), Error);
}

TEST_CASE("convex subsemilattices") {
  const MeetSemilattice one = MeetSemilattice::from_table({"0"}, {{0}});
  CHECK(convex_sub_meet(one).closed_sets().size() == 2);
  const MeetSemilattice fan = test_support::fan();
  std::vector<std::uint64_t> both;
  const auto co = masks(co_poset(fan.order()));
  const auto sm = masks(sub_meet(fan));
  std::set_intersection(co.begin(), co.end(), sm.begin(), sm.end(), std::back_inserter(both));
  CHECK(masks(convex_sub_meet(fan)) == both);
  CHECK(both.size() == 7);
  const MeetSemilattice c3 = MeetSemilattice::from_poset(FinitePoset::chain(3));
  CHECK(masks(convex_sub_meet(c3)) == masks(co_poset(FinitePoset::chain(3))));
  // Convex geometry when every principal filter is a tree; not in general.
  std::size_t non_tree = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const MeetSemilattice& s : all_meet_semilattices(n)) {
      if (principal_filters_are_trees(s)) {
        CHECK(is_convex_geometry(convex_sub_meet(s)).convex);
      } else {
        ++non_tree;
      }
    }
  CHECK(non_tree == 7);
  const MeetSemilattice b2 = MeetSemilattice::from_poset(FinitePoset::of_lattice(construct::boolean(2)));
  CHECK_FALSE(principal_filters_are_trees(b2));
  CHECK_FALSE(is_convex_geometry(convex_sub_meet(b2)).anti_exchange);
  CHECK(principal_filters_are_trees(test_support::fan()));
}

TEST_CASE("suborders") {
  const ClosureSystem c2 = suborders(FinitePoset::chain(2));
  CHECK(c2.ground_size() == 1);
  CHECK(c2.closed_sets().size() == 2);
  const ClosureSystem c3 = suborders(FinitePoset::chain(3));
  CHECK(c3.ground_size() == 3);
  CHECK(c3.closed_sets().size() == 7);
  CHECK(suborders(FinitePoset::antichain(3)).closed_sets().size() == 1);
  for (std::size_t n = 1; n <= 4; ++n)
    for (const FinitePoset& p : all_posets(n)) {
      const ClosureSystem cs = suborders(p);
      CHECK(cs.closed_sets().size() == oracle::transitive_suborder_count(test_support::to_matrix(p)));
      CHECK(is_convex_geometry(cs).convex);
    }
}

TEST_CASE("filter lattices") {
  for (const FiniteLattice& l : {construct::chain(4), construct::n5(), construct::boolean(2), construct::m3()}) {
    const FilterLattice f = filter_lattice(l);
    CHECK(f.isomorphic);
    CHECK(f.lattice.size() == l.size());
    std::vector<ElementId> map;
    for (const auto& p : f.principal) {
      REQUIRE(p);
      map.push_back(*p);
    }
    CHECK(is_order_isomorphism(l, f.lattice, map));
  }
  CHECK(filter_lattice(construct::boolean(2)).filters.size() == 4);
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> posets{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(all_posets(n).size() == posets[n]);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(all_posets(n).size() == oracle::unlabelled_orders(n).size());
  const std::vector<std::size_t> semis{0, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(all_meet_semilattices(n).size() == semis[n]);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(all_meet_semilattices(n).size() == oracle::meet_semilattice_count(n));
  CHECK(all_moore(2).size() == 7);
  CHECK(all_moore(3).size() == 61);
  CHECK(oracle::moore_count(2) == 7);
  CHECK(oracle::moore_count(3) == 61);
  CHECK_THROWS_AS(all_moore(4), Error);
}

TEST_CASE("random posets are deterministic") {
  const auto a = random_posets(10, 6, 1);
  const auto b = random_posets(10, 6, 1);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].size() >= 1);
    CHECK(a[i].size() <= 6);
    CHECK(test_support::to_matrix(a[i]) == test_support::to_matrix(b[i]));
  }
  CHECK_THROWS_AS(random_posets(1, 0, 1), Error);
  const auto c1 = corpus({CorpusKind::kRandomPosets, 6, 10, 1, false});
  const auto c2 = corpus({CorpusKind::kRandomPosets, 6, 10, 1, false});
  REQUIRE(c1.size() == c2.size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    CHECK(c1[i].id == c2[i].id);
    CHECK(c1[i].system.closed_sets() == c2[i].system.closed_sets());
  }
}

TEST_CASE("generated systems are atomistic convex geometries") {
  for (const CorpusItem& item : standard_corpus(3, 20, 6)) {
    if (item.id.starts_with("moore/")) continue;
    INFO(item.id);
    CHECK(is_convex_geometry(item.system).convex);
    CHECK(is_atomistic(cld_lattice(item.system).lattice).holds());
  }
}
