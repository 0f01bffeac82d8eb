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

#include "fatghom/cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "fatghom/chain_complex.h"
#include "fatghom/generation.h"
#include "fatghom/isomorphism.h"
#include "fatghom/permutation.h"
#include "fatghom/report.h"
#include "fatghom/serialization.h"

namespace fatghom {

namespace fs = std::filesystem;

namespace {

bool CheckSignature(const CliOptions& options, std::ostream& err) {
  if (IsStableSignature(options.g, options.n)) return true;
  err << "error: (g, n) = (" << options.g << ", " << options.n
      << ") is not stable; need n > 0 and 2 - 2g - n < 0\n";
  return false;
}

std::string CountRow(const GraphFamily& family) {
  std::ostringstream row;
  row << "g=" << family.g << " n=" << family.n << ":";
  for (auto it = family.by_edge_count.rbegin(); it != family.by_edge_count.rend(); ++it) {
    row << " m" << it->first << "=" << it->second.size();
  }
  row << " total=" << family.total();
  return row.str();
}

// Empty string on success, else a description of the first problem.
std::string CheckFamily(const GraphFamily& family) {
  for (const auto& [m, graphs] : family.by_edge_count) {
    IsomorphismClassifier classes;
    for (const Fatgraph& graph : graphs) {
      if (graph.genus() != family.g || graph.num_boundary_cycles() != family.n ||
          graph.num_edges() != m) {
        return "graph " + std::to_string(classes.graphs().size()) + " of bucket m=" +
               std::to_string(m) + " has the wrong type";
      }
      if (classes.Find(graph).has_value()) {
        return "bucket m=" + std::to_string(m) + " holds two isomorphic graphs";
      }
      classes.Insert(graph);
    }
  }
  return "";
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Loads the family from checkpoints or generates and stores it.
GraphFamily ObtainFamily(const CliOptions& options, bool* loaded, double* seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<GraphFamily> family = ReadFamily(options.out_dir, options.g, options.n);
  *loaded = family.has_value();
  if (!family.has_value()) {
    family = MgnGraphs(options.g, options.n);
    WriteFamily(options.out_dir, *family);
  }
  *seconds = SecondsSince(start);
  return *std::move(family);
}

template <typename Body>
int Guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const FatgraphError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kIo: return kExitIo;
      case ErrorCode::kInvalidSignature:
      case ErrorCode::kInfeasibleSize: return kExitBadArguments;
      default: return kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace

fs::path DefaultOutDir() {
  if (const char* env = std::getenv("FATGHOM_OUT"); env != nullptr && *env != '\0') {
    return env;
  }
  return "out";
}

int RunGenerate(const CliOptions& options, std::ostream& out, std::ostream& err) {
  if (!CheckSignature(options, err)) return kExitBadArguments;
  return Guarded(err, [&]() {
    bool loaded = false;
    double seconds = 0;
    const GraphFamily family = ObtainFamily(options, &loaded, &seconds);
    if (loaded) {
      const std::string problem = CheckFamily(family);
      if (!problem.empty()) {
        err << "error: checkpoint in " << options.out_dir << ": " << problem << '\n';
        return static_cast<int>(kExitVerifyFailed);
      }
      out << "loaded checkpoints from " << options.out_dir.string() << '\n';
    } else {
      out << "wrote checkpoints to " << options.out_dir.string() << '\n';
    }
    out << CountRow(family) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int RunHomology(const CliOptions& options, std::ostream& out, std::ostream& err) {
  if (!CheckSignature(options, err)) return kExitBadArguments;
  if (options.format != "json" && options.format != "csv") {
    err << "error: unknown format '" << options.format << "'\n";
    return kExitBadArguments;
  }
  return Guarded(err, [&]() {
    bool loaded = false;
    double seconds = 0;
    const GraphFamily family = ObtainFamily(options, &loaded, &seconds);
    RankOptions rank_options;
    rank_options.seed = options.seed;
    ChainComplex complex;
    const RunReport report = ComputeRunReport(family, seconds, rank_options, &complex);

    const fs::path report_path = options.out_dir / ("report_g" + std::to_string(options.g) +
                                                    "_n" + std::to_string(options.n) + ".json");
    std::ofstream file(report_path);
    file << ReportToJson(report).dump(2) << '\n';
    if (!file) throw FatgraphError(ErrorCode::kIo, "cannot write " + report_path.string());
    if (options.dump_matrices) {
      for (const auto& [m, matrix] : complex.matrices) {
        const fs::path path = options.out_dir / ("D_g" + std::to_string(options.g) + "_n" +
                                                 std::to_string(options.n) + "_m" +
                                                 std::to_string(m) + ".txt");
        std::ofstream dump(path);
        matrix.WriteCoordinate(dump);
        if (!dump) throw FatgraphError(ErrorCode::kIo, "cannot write " + path.string());
      }
    }
    if (options.format == "csv") {
      out << CsvHeader(static_cast<int>(report.betti.size())) << '\n' << CsvRow(report) << '\n';
    } else {
      out << ReportToJson(report).dump(2) << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

int RunVerify(const CliOptions& options, std::ostream& out, std::ostream& err) {
  if (!CheckSignature(options, err)) return kExitBadArguments;
  return Guarded(err, [&]() {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
      out << (ok ? "ok    " : "FAIL  ") << name;
      if (!detail.empty()) out << "  (" << detail << ")";
      out << '\n';
      if (!ok) ++failures;
    };

    const GraphFamily family = MgnGraphs(options.g, options.n);
    const std::string problem = CheckFamily(family);
    report("family_types_and_isomorph_free", problem.empty(), problem);

    bool contraction_ok = true;
    for (const auto& [m, graphs] : family.by_edge_count) {
      for (const Fatgraph& graph : graphs) {
        for (EdgeLabel e = 0; e < graph.num_edges(); ++e) {
          if (graph.is_loop(e)) continue;
          const Fatgraph c = Contract(graph, e);
          contraction_ok &= c.genus() == options.g && c.num_boundary_cycles() == options.n;
        }
      }
    }
    report("contraction_preserves_type", contraction_ok);

    bool round_trip_ok = true;
    for (const auto& [m, graphs] : family.by_edge_count) {
      for (const Fatgraph& graph : graphs) {
        const Fatgraph back =
            FatgraphFromJson(nlohmann::json::parse(FatgraphToJson(graph).dump()));
        round_trip_ok &= back.ToLists() == graph.ToLists() &&
                         back.orientation() == graph.orientation() &&
                         AreIsomorphic(back, graph);
      }
    }
    if (std::optional<GraphFamily> stored = ReadFamily(options.out_dir, options.g, options.n)) {
      for (const auto& [m, graphs] : stored->by_edge_count) {
        const std::vector<Fatgraph>& fresh = family.by_edge_count.at(m);
        round_trip_ok &= graphs.size() == fresh.size();
        for (std::size_t i = 0; round_trip_ok && i < graphs.size(); ++i) {
          round_trip_ok &= AreIsomorphic(graphs[i], fresh[i]);
        }
      }
    }
    report("checkpoint_round_trip", round_trip_ok);

    const int max_m = MaxEdges(options.g, options.n);
    if (2 * max_m <= options.max_half_edges) {
      OracleOptions oracle_options;
      oracle_options.max_half_edges = options.max_half_edges;
      const std::vector<Fatgraph> brute =
          OracleGenerateFromPermutations(options.g, options.n, max_m, oracle_options);
      const std::vector<Fatgraph>& recursive = family.by_edge_count.at(max_m);
      bool same = brute.size() == recursive.size();
      IsomorphismClassifier classes;
      for (const Fatgraph& graph : recursive) classes.Insert(graph);
      for (const Fatgraph& graph : brute) same &= classes.Find(graph).has_value();
      report("oracle_equivalence", same,
             std::to_string(brute.size()) + " vs " + std::to_string(recursive.size()));
    } else if (options.oracle) {
      throw FatgraphError(ErrorCode::kInfeasibleSize,
                          "oracle needs " + std::to_string(2 * max_m) +
                              " half-edges; raise --max-half-edges");
    } else {
      out << "skip  oracle_equivalence  (" << 2 * max_m << " half-edges exceeds "
          << options.max_half_edges << ")\n";
    }

    RankOptions rank_options;
    rank_options.seed = options.seed;
    ChainComplex complex;
    const RunReport run = ComputeRunReport(family, 0, rank_options, &complex);

    bool cosets_ok = true;
    const std::int64_t n_factorial = Factorial(options.n);
    for (const auto& [m, bucket] : complex.buckets) {
      for (const MarkedFatgraphPool& pool : bucket.pools) {
        cosets_ok &= static_cast<std::int64_t>(pool.num_markings()) *
                         static_cast<std::int64_t>(pool.P.size()) == n_factorial;
      }
    }
    report("coset_partition", cosets_ok);
    report("chain_property", VerifyChainProperty(complex));

    bool nonnegative = true;
    for (std::int64_t b : run.betti) nonnegative &= b >= 0;
    report("betti_nonnegative", nonnegative);
    report("euler_classical_matches_dims", run.classical_chi == run.alternating_dims,
           "chi = " + std::to_string(run.classical_chi) + ", virtual = " +
               run.virtual_chi_signed);

    if (options.g == 1 && options.n == 1) {
      out << "note  the 2-edge graph of (1,1) has an orientation-reversing automorphism "
             "fixing its boundary cycle, so dim W^(2) = 0\n";
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
        << '\n';
    return static_cast<int>(failures == 0 ? kExitOk : kExitVerifyFailed);
  });
}

}  // namespace fatghom
