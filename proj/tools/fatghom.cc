// Copyright 2026 The fatghom Authors.
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

// fatghom: fatgraph generation and Betti numbers of M_{g,n}.
//
//   fatghom generate G N   write per-edge-count checkpoints, print counts
//   fatghom homology G N   print the homology report (JSON or CSV)
//   fatghom verify G N     run internal consistency checks

#include <omp.h>

#include <iostream>

#include "CLI11.hpp"
#include "fatghom/cli.h"

int main(int argc, char** argv) {
  fatghom::CliOptions options;
  options.out_dir = fatghom::DefaultOutDir();
  std::string out_dir = options.out_dir.string();

  CLI::App app{"Fatgraph enumeration and homology of moduli spaces of curves"};
  app.require_subcommand(1);
  app.add_option("--out", out_dir, "Directory for checkpoints and reports")
      ->capture_default_str();
  app.add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--oracle", options.oracle,
               "Require the brute-force generation cross-check in verify");
  app.add_option("--max-half-edges", options.max_half_edges,
                 "Half-edge bound for the brute-force oracle")
      ->capture_default_str();
  app.add_option("--seed", options.seed, "Seed for rank prime selection")
      ->capture_default_str();
  app.add_option("--jobs", options.jobs, "Worker threads (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--dump-matrices", options.dump_matrices,
               "Write boundary matrices in coordinate form next to the report");

  auto add_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("g", options.g, "Genus")->required();
    sub->add_option("n", options.n, "Number of boundary cycles")->required();
    sub->fallthrough();
    return sub;
  };
  CLI::App* generate = add_command("generate", "Generate the fatgraph family");
  CLI::App* homology = add_command("homology", "Compute Betti numbers");
  CLI::App* verify = add_command("verify", "Run consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? fatghom::kExitOk : fatghom::kExitBadArguments;
  }
  options.out_dir = out_dir;
  if (options.jobs > 0) omp_set_num_threads(options.jobs);

  if (generate->parsed()) return fatghom::RunGenerate(options, std::cout, std::cerr);
  if (homology->parsed()) return fatghom::RunHomology(options, std::cout, std::cerr);
  if (verify->parsed()) return fatghom::RunVerify(options, std::cout, std::cerr);
  return fatghom::kExitBadArguments;
}
