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

// Command-line front end: check, decompose, generate, explore, corpus.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "cgeom/cli.hpp"

namespace {

std::filesystem::path output_path(const std::string& requested) {
  std::filesystem::path path(requested);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("CGEOM_OUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closure systems, convex geometries and their lattices."};
  app.require_subcommand(1);

  cgeom::RunConfig config;
  std::string output;
  std::uint64_t seed = 0;
  const std::map<std::string, cgeom::OutputFormat> formats{
      {"json", cgeom::OutputFormat::kJson}, {"dot", cgeom::OutputFormat::kDot}, {"text", cgeom::OutputFormat::kText}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json, dot or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("-o,--output", output, "write here instead of stdout (relative to $CGEOM_OUT_DIR if set)");
  };

  auto* check = app.add_subcommand("check", "property report of a lattice or closure file");
  check->add_option("-i,--input", config.input, "lattice or closure JSON")->required();
  check->add_option("--max-family", config.max_family, "family bound for the starred law")->check(CLI::Range(2, 8));
  common(check);

  auto* decompose = app.add_subcommand("decompose", "canonical join decomposition of every element");
  decompose->add_option("-i,--input", config.input, "lattice or closure JSON")->required();
  decompose->add_option("--samples", config.samples, "random representations checked per element");
  decompose->add_option("--seed", seed, "sampling seed");
  common(decompose);

  auto* generate = app.add_subcommand("generate", "write a closure system or lattice");
  generate->add_option("name", config.generator, "generator")
      ->required()
      ->check(CLI::IsMember(cgeom::generator_names()));
  generate->add_option("-i,--input", config.input, "poset, semilattice, lattice or closure JSON");
  generate->add_option("-n", config.n, "size parameter for named lattices");
  common(generate);

  auto* explore = app.add_subcommand("explore", "bounded exploration of an infinite lattice");
  explore->add_option("--instance", config.instance, "lattice_K, omega_zero_or_finite, "
                                                     "chain_dual_times_two_doubled_atom or trivial")
      ->required();
  explore->add_option("--depth", config.depth, "levels below the roots")->check(CLI::PositiveNumber);
  explore->add_option("--budget", config.budget, "covers per element")->check(CLI::PositiveNumber);
  explore->add_option("--check", config.property,
                      "cover_singleton, unique_j, lower_semimodular, spatial or strongly_spatial_at:A,B");
  explore->add_option("--root", config.roots, "additional elements to explore from");
  common(explore);

  auto* corpus = app.add_subcommand("corpus", "stream reports over a generated corpus");
  corpus->add_option("--kind", config.generator, "moore, posets, semilattices, random or standard")->required();
  corpus->add_option("-n", config.n, "size (maximum size for random posets)");
  corpus->add_option("--count", config.count, "random poset count");
  corpus->add_option("--seed", seed, "seed for random corpora");
  corpus->add_flag("--allow-large", config.allow_large, "permit Moore families on 4 points");
  common(corpus);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) config.command = cgeom::Command::kCheck;
  if (decompose->parsed()) config.command = cgeom::Command::kDecompose;
  if (generate->parsed()) config.command = cgeom::Command::kGenerate;
  if (explore->parsed()) config.command = cgeom::Command::kExplore;
  if (corpus->parsed()) config.command = cgeom::Command::kCorpus;
  for (auto* sub : {decompose, corpus}) {
    if (sub->parsed() && sub->count("--seed") > 0) config.seed = seed;
  }

  const cgeom::RunResult result = cgeom::run(config);
  if (result.exit_code != 0) {
    std::cerr << "cgeom: " << result.error << "\n";
    return result.exit_code;
  }
  if (output.empty()) {
    std::cout << result.output;
    return 0;
  }
  const auto path = output_path(output);
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << result.output)) {
    std::cerr << "cgeom: cannot write " << path.string() << "\n";
    return 2;
  }
  return 0;
}
