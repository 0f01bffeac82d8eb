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

// Subcommand drivers behind the fatghom executable.

#ifndef FATGHOM_CLI_H_
#define FATGHOM_CLI_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

namespace fatghom {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitBadArguments = 2,
  kExitVerifyFailed = 3,
};

struct CliOptions {
  int g = 0;
  int n = 0;
  std::filesystem::path out_dir;
  std::string format = "json";  // json | csv
  bool oracle = false;
  int max_half_edges = 12;
  std::uint64_t seed = 1;
  int jobs = 0;  // 0 leaves the OpenMP default
  bool dump_matrices = false;
};

// $FATGHOM_OUT if set, else ./out.
std::filesystem::path DefaultOutDir();

// Writes one checkpoint per edge count and prints the count per edge count.
// Existing checkpoints are loaded and checked instead of regenerated.
int RunGenerate(const CliOptions& options, std::ostream& out, std::ostream& err);

// Computes dimensions, ranks, Betti numbers and Euler characteristics,
// writes report_g{g}_n{n}.json and prints it (or a CSV row).
int RunHomology(const CliOptions& options, std::ostream& out, std::ostream& err);

// Runs the internal consistency checks; exit code 3 if any fails.
int RunVerify(const CliOptions& options, std::ostream& out, std::ostream& err);

}  // namespace fatghom

#endif  // FATGHOM_CLI_H_
