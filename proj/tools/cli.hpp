#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "structctl/decision.hpp"
#include "structctl/statespace.hpp"

namespace structctl::cli {

enum ExitStatus : int { kControllable = 0, kUncontrollable = 1, kInputError = 2 };

// JSON keys are part of the tool's interface: verdict, minimal, term_rank,
// redundant_edges ([i, j] pairs), components ({rows, cols, max_weight}),
// witness ({component, edge, weight} or null). Indices are 1-based.
nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const StateSpaceReport& report);

/// Plain-text report; the first line is the verdict phrase alone.
void print_report(std::ostream& out, const AnalysisReport& report, bool quiet);

struct BenchConfig {
  std::vector<Index> sizes{50, 100, 200, 400};
  double edges_factor = 3.0;
  double cols_factor = 1.25;
  Degree max_degree = 2;
  std::uint64_t seed = 1;
  double timeout_seconds = 10.0;
  /// Report timings of the edge-marking reduction; the other variant still
  /// runs as a cross-check.
  bool optimized = false;
};

struct BenchResult {
  Index p = 0;
  Index v = 0;
  std::size_t edge_count = 0;
  double reduce_seconds = 0.0;
  double total_seconds = 0.0;
  double alt_total_seconds = 0.0;  // the variant not selected by `optimized`
  Verdict verdict = Verdict::structurally_controllable;
  bool verdicts_match = true;
  bool timed_out = false;
};

std::vector<BenchResult> run_bench(const BenchConfig& config);
void print_bench(std::ostream& out, const std::vector<BenchResult>& rows);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace structctl::cli
