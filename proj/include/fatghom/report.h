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

// Per-(g, n) run summary and its JSON and CSV renderings.

#ifndef FATGHOM_REPORT_H_
#define FATGHOM_REPORT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fatghom/chain_complex.h"
#include "fatghom/rank.h"
#include "json.hpp"

namespace fatghom {

struct StageTimes {
  double generation = 0;
  double matrices = 0;
  double ranks = 0;
};

struct RunReport {
  int g = 0;
  int n = 0;
  StageTimes seconds;
  std::map<int, int> graph_counts;        // abstract fatgraphs per edge count
  std::map<int, std::int64_t> dims;       // orientable marked classes per edge count
  std::map<int, std::int64_t> ranks;      // rank of D^(m)
  std::map<int, std::string> rank_methods;
  std::vector<std::int64_t> betti;
  std::int64_t classical_chi = 0;
  std::int64_t alternating_dims = 0;
  std::string virtual_chi;         // "p/q", magnitude
  std::string virtual_chi_signed;  // "p/q", sum of (-1)^m n! / |Aut G|
};

// Runs the whole pipeline on a ready-made family.
RunReport ComputeRunReport(const GraphFamily& family, double generation_seconds,
                           const RankOptions& options,
                           ChainComplex* complex_out = nullptr);

nlohmann::json ReportToJson(const RunReport& report);
// "g,n,b0,...,b{k-1}".
std::string CsvHeader(int num_degrees);
std::string CsvRow(const RunReport& report);

std::string RationalString(const mpq_class& q);

}  // namespace fatghom

#endif  // FATGHOM_REPORT_H_
