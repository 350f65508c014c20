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

#ifndef CGEOM_CHECK_HPP
#define CGEOM_CHECK_HPP

#include <optional>
#include <utility>

namespace cgeom {

/// Outcome of a predicate that either holds or produces a counterexample.
template <typename Witness>
struct CheckResult {
  std::optional<Witness> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(Witness w) { return CheckResult{std::move(w)}; }

  bool holds() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return holds(); }
};

}  // namespace cgeom

#endif  // CGEOM_CHECK_HPP
