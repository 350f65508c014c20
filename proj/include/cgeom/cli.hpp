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

#ifndef CGEOM_CLI_HPP
#define CGEOM_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cgeom {

enum class Command { kCheck, kDecompose, kGenerate, kExplore, kCorpus };
enum class OutputFormat { kJson, kDot, kText };

struct RunConfig {
  Command command = Command::kCheck;
  /// Lattice, closure, poset or semilattice file.
  std::string input;
  /// Generator name for `generate`, corpus kind for `corpus`.
  std::string generator;
  std::size_t n = 3;
  std::size_t count = 200;
  bool allow_large = false;
  std::string instance;
  std::size_t depth = 3;
  std::size_t budget = 4;
  std::string property;
  std::vector<std::string> roots;
  std::size_t max_family = 3;
  std::size_t samples = 16;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::kJson;
};

struct RunResult {
  /// 0 unless a tool fault occurred; failed properties are data.
  int exit_code = 0;
  std::string output;
  std::string error;
};

/// Generator names accepted by `generate`.
std::vector<std::string> generator_names();

RunResult run(const RunConfig& config);

}  // namespace cgeom

#endif  // CGEOM_CLI_HPP
