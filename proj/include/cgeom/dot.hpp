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

#ifndef CGEOM_DOT_HPP
#define CGEOM_DOT_HPP

#include <string>
#include <vector>

#include "cgeom/explorer.hpp"
#include "cgeom/lattice.hpp"

namespace cgeom {

struct DotAnnotations {
  bool join_irreducibles = true;
  std::vector<ElementId> extreme;
  std::vector<ElementId> witness;
  std::string title;
};

/// Hasse diagram drawn bottom to top. Join irreducibles are double circles,
/// extreme points filled, witnesses red. Output depends only on the inputs.
std::string emit_dot(const FiniteLattice& lattice, const DotAnnotations& annotations = {});

/// Window diagram. Nodes whose covers were cut off (by the budget or the
/// depth) are dashed and tagged "...".
std::string emit_dot(const LazyLattice& lattice, const Window& window, const std::vector<LazyElement>& witness = {});

}  // namespace cgeom

#endif  // CGEOM_DOT_HPP
