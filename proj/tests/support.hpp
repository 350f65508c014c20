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

#ifndef CGEOM_TESTS_SUPPORT_HPP
#define CGEOM_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "cgeom/generators.hpp"
#include "cgeom/lattice.hpp"
#include "oracles.hpp"

namespace test_support {

inline oracle::Lattice to_oracle(const cgeom::FiniteLattice& lattice) {
  oracle::Lattice out;
  out.leq.assign(lattice.size(), std::vector<bool>(lattice.size(), false));
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = 0; b < lattice.size(); ++b) out.leq[a][b] = lattice.leq(a, b);
  return out;
}

inline oracle::Matrix to_matrix(const cgeom::FinitePoset& poset) {
  oracle::Matrix out(poset.size(), std::vector<bool>(poset.size(), false));
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b) out[a][b] = poset.leq(a, b);
  return out;
}

// 0 below incomparable a, b.
inline cgeom::MeetSemilattice fan() {
  return cgeom::MeetSemilattice::from_table({"0", "a", "b"}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
}

inline cgeom::ElementId id(const cgeom::FiniteLattice& lattice, const std::string& name) {
  return lattice.find(name).value();
}

}  // namespace test_support

#endif  // CGEOM_TESTS_SUPPORT_HPP
