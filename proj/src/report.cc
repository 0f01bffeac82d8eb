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

#include "fatghom/report.h"

#include <chrono>

namespace fatghom {

namespace {

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Map>
nlohmann::json KeyedByEdges(const Map& values) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [m, v] : values) out[std::to_string(m)] = v;
  return out;
}

}  // namespace

std::string RationalString(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RunReport ComputeRunReport(const GraphFamily& family, double generation_seconds,
                           const RankOptions& options, ChainComplex* complex_out) {
  RunReport report;
  report.g = family.g;
  report.n = family.n;
  report.seconds.generation = generation_seconds;
  for (const auto& [m, graphs] : family.by_edge_count) {
    report.graph_counts[m] = static_cast<int>(graphs.size());
  }

  auto start = std::chrono::steady_clock::now();
  ChainComplex complex = BuildChainComplex(family, options.parallel);
  report.seconds.matrices = SecondsSince(start);
  for (const auto& [m, bucket] : complex.buckets) report.dims[m] = bucket.dimension;

  start = std::chrono::steady_clock::now();
  for (const auto& [m, result] : ComputeRanks(complex, options)) {
    report.ranks[m] = result.rank;
    report.rank_methods[m] = result.method == RankMethod::kExact
                                 ? (result.escalated ? "exact (escalated)" : "exact")
                                 : "modular";
  }
  report.seconds.ranks = SecondsSince(start);

  report.betti = BettiNumbers(complex, report.ranks);
  const EulerCharacteristics chi = ComputeEulerCharacteristics(complex, report.betti);
  report.classical_chi = chi.classical;
  report.alternating_dims = chi.alternating_dims;
  report.virtual_chi = RationalString(chi.virtual_magnitude);
  report.virtual_chi_signed = RationalString(chi.virtual_signed);
  if (complex_out != nullptr) *complex_out = std::move(complex);
  return report;
}

nlohmann::json ReportToJson(const RunReport& r) {
  return {{"g", r.g},
          {"n", r.n},
          {"seconds",
           {{"generation", r.seconds.generation},
            {"matrices", r.seconds.matrices},
            {"ranks", r.seconds.ranks}}},
          {"graph_counts", KeyedByEdges(r.graph_counts)},
          {"dims", KeyedByEdges(r.dims)},
          {"ranks", KeyedByEdges(r.ranks)},
          {"rank_methods", KeyedByEdges(r.rank_methods)},
          {"betti", r.betti},
          {"classical_chi", r.classical_chi},
          {"alternating_dims", r.alternating_dims},
          {"virtual_chi", r.virtual_chi},
          {"virtual_chi_signed", r.virtual_chi_signed}};
}

std::string CsvHeader(int num_degrees) {
  std::string out = "g,n";
  for (int k = 0; k < num_degrees; ++k) out += ",b" + std::to_string(k);
  return out;
}

std::string CsvRow(const RunReport& r) {
  std::string out = std::to_string(r.g) + "," + std::to_string(r.n);
  for (std::int64_t b : r.betti) out += "," + std::to_string(b);
  return out;
}

}  // namespace fatghom
