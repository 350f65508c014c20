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

#include <array>
#include <vector>

#include "cgeom/error.hpp"
#include "cgeom/lattice.hpp"
#include "support.hpp"

using namespace cgeom;
using test_support::id;

namespace {

std::vector<ElementId> ids(const FiniteLattice& l, std::initializer_list<const char*> names) {
  std::vector<ElementId> out;
  for (const char* n : names) out.push_back(id(l, n));
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kParseError;
}

}  // namespace

TEST_CASE("build from covers and order") {
  const std::array<IdPair, 0> none{};
  const FiniteLattice trivial = FiniteLattice::build({"x"}, none, RelationMode::kCovers);
  CHECK(trivial.size() == 1);
  CHECK(trivial.join_irreducibles().empty());
  CHECK(trivial.top() == trivial.bottom());

  const std::vector<IdPair> pentagon{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  const FiniteLattice n5 = FiniteLattice::build({"0", "a", "b", "c", "1"}, pentagon, RelationMode::kCovers);
  CHECK(n5.join_irreducibles() == ids(n5, {"a", "b", "c"}));
  CHECK(n5.leq(id(n5, "a"), id(n5, "c")));
  CHECK_FALSE(n5.leq(id(n5, "b"), id(n5, "c")));

  const std::vector<IdPair> order{{0, 1}, {0, 2}, {1, 2}};
  const FiniteLattice c3 = FiniteLattice::build({"0", "m", "1"}, order, RelationMode::kOrder);
  CHECK(c3.lower_covers(2) == std::vector<ElementId>{1});
}

TEST_CASE("build rejects non-orders and non-lattices") {
  const std::vector<IdPair> cycle{{0, 1}, {1, 0}};
  CHECK(code_of([&] { FiniteLattice::build({"a", "b"}, cycle, RelationMode::kCovers); }) == ErrorCode::kNotAPartialOrder);
  const std::vector<IdPair> loop{{0, 0}};
  CHECK(code_of([&] { FiniteLattice::build({"a"}, loop, RelationMode::kCovers); }) == ErrorCode::kNotAPartialOrder);
  const std::vector<IdPair> vee{{0, 1}, {0, 2}};
  CHECK(code_of([&] { FiniteLattice::build({"0", "a", "b"}, vee, RelationMode::kCovers); }) == ErrorCode::kNotALattice);
  // Two maximal upper bounds of a, b: no join.
  const std::vector<IdPair> bowtie{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  CHECK(code_of([&] { FiniteLattice::build({"0", "a", "b", "c", "d", "1"}, bowtie, RelationMode::kCovers); }) ==
        ErrorCode::kNotALattice);
}

TEST_CASE("lattice algebra") {
  const FiniteLattice n5 = construct::n5();
  const std::array<ElementId, 2> ab{id(n5, "a"), id(n5, "b")};
  CHECK(lattice_algebra(n5, LatticeOp::kJoin, ab) == id(n5, "1"));
  CHECK(lattice_algebra(n5, LatticeOp::kMeet, ab) == id(n5, "0"));
  CHECK(lattice_algebra(n5, LatticeOp::kJoinSet, std::span<const ElementId>{}) == n5.bottom());
  CHECK(lattice_algebra(n5, LatticeOp::kMeetSet, std::span<const ElementId>{}) == n5.top());
  const std::array<ElementId, 2> ac{id(n5, "a"), id(n5, "c")};
  CHECK(lattice_algebra(n5, LatticeOp::kLeq, ac) == 1);
  const FiniteLattice m3 = construct::m3();
  CHECK(m3.meet(id(m3, "b"), id(m3, "c")) == id(m3, "0"));
  const std::array<ElementId, 2> bad{0, 99};
  CHECK(code_of([&] { lattice_algebra(n5, LatticeOp::kJoin, bad); }) == ErrorCode::kUnknownElement);
}

TEST_CASE("meet and join agree with brute force") {
  for (const FiniteLattice& l : {construct::n5(), construct::m3(), construct::boolean(3), construct::chain(4),
                                 construct::chain_dual_times_two_doubled_atom(4),
                                 construct::product(construct::n5(), construct::chain(2))}) {
    const oracle::Lattice o = test_support::to_oracle(l);
    for (ElementId a = 0; a < l.size(); ++a)
      for (ElementId b = 0; b < l.size(); ++b) {
        CHECK(l.meet(a, b) == o.meet(a, b));
        CHECK(l.join(a, b) == o.join(a, b));
        CHECK(l.covers(a, b) == o.covers(a, b));
      }
    for (ElementId a = 0; a < l.size(); ++a) CHECK(l.is_join_irreducible(a) == o.join_irreducible(a));
  }
}

TEST_CASE("covers and ji_below") {
  const FiniteLattice c3 = construct::chain(3);
  CHECK(covers_of(c3, 2, CoverDirection::kLower) == std::vector<ElementId>{1});
  CHECK(covers_of(c3, c3.bottom(), CoverDirection::kLower).empty());
  const FiniteLattice n5 = construct::n5();
  CHECK(covers_of(n5, id(n5, "1"), CoverDirection::kLower) == ids(n5, {"b", "c"}));
  CHECK(ji_below(n5, id(n5, "1")) == ids(n5, {"a", "b", "c"}));
  CHECK(ji_below(n5, id(n5, "c")) == ids(n5, {"a", "c"}));
  CHECK(ji_below(n5, n5.bottom()).empty());
  CHECK(code_of([&] { covers_of(n5, 7, CoverDirection::kUpper); }) == ErrorCode::kUnknownElement);
}

TEST_CASE("refinement") {
  const FiniteLattice n5 = construct::n5();
  const auto ab = ids(n5, {"a", "b"});
  const auto cb = ids(n5, {"c", "b"});
  auto w = refines(n5, ab, cb);
  REQUIRE(w);
  CHECK(w->pairs == std::vector<IdPair>{{id(n5, "a"), id(n5, "c")}, {id(n5, "b"), id(n5, "b")}});
  auto self = refines(n5, ab, ab);
  REQUIRE(self);
  CHECK(self->pairs == std::vector<IdPair>{{ab[0], ab[0]}, {ab[1], ab[1]}});
  auto empty = refines(n5, std::span<const ElementId>{}, cb);
  REQUIRE(empty);
  CHECK(empty->pairs.empty());
  CHECK_FALSE(refines(n5, cb, ab));
}

TEST_CASE("constructors") {
  const FiniteLattice b2 = construct::boolean(2);
  CHECK(b2.size() == 4);
  CHECK(b2.atoms().size() == 2);
  CHECK(find_isomorphism(construct::dual(construct::chain(3)), construct::chain(3)));
  CHECK(find_isomorphism(construct::dual(construct::n5()), construct::n5()));
  CHECK_FALSE(find_isomorphism(construct::m3(), construct::n5()));
  CHECK(construct::antichain_with_bounds(3).size() == 5);
  CHECK(find_isomorphism(construct::antichain_with_bounds(3), construct::m3()));
  CHECK(find_isomorphism(construct::product(construct::chain(2), construct::chain(2)), b2));

  const FiniteLattice n5 = construct::n5();
  const FiniteLattice top_part = construct::interval(n5, id(n5, "a"), id(n5, "1"));
  CHECK(top_part.size() == 3);
  CHECK(code_of([&] { construct::interval(n5, id(n5, "b"), id(n5, "c")); }) == ErrorCode::kEmptyInterval);

  const FiniteLattice d = construct::chain_dual_times_two_doubled_atom(4);
  CHECK(d.size() == 9);
  CHECK(d.name(d.top()) == "(0,1)");
  CHECK(d.name(d.bottom()) == "(3,0)");
  CHECK(d.covers(id(d, "t_lo"), id(d, "t_hi")));
  CHECK(d.covers(id(d, "t_hi"), id(d, "(2,1)")));
  CHECK(d.covers(id(d, "(3,0)"), id(d, "t_lo")));
}

TEST_CASE("isomorphism check") {
  const FiniteLattice c3 = construct::chain(3);
  const std::vector<ElementId> identity{0, 1, 2};
  const std::vector<ElementId> swapped{0, 2, 1};
  CHECK(is_order_isomorphism(c3, c3, identity));
  CHECK_FALSE(is_order_isomorphism(c3, c3, swapped));
}
