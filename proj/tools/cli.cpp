#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "structctl/errors.hpp"
#include "structctl/oracle/oracle.hpp"
#include "structctl/random_pattern.hpp"

namespace structctl::cli {

namespace {

nlohmann::json pair_json(Index row, Index col) { return nlohmann::json::array({row + 1, col + 1}); }

nlohmann::json one_based(const std::vector<Index>& xs) {
  auto out = nlohmann::json::array();
  for (Index x : xs) out.push_back(x + 1);
  return out;
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + ")";
}

std::string index_set(const std::vector<Index>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(xs[k] + 1);
  }
  return s + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// First non-comment token of a fixture file: "pattern" or "statespace".
std::string header_keyword(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string first;
    if (words >> first && first.front() != '#') return first;
  }
  return {};
}

int verdict_status(Verdict v) { return v == Verdict::structurally_controllable ? kControllable : kUncontrollable; }

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
  std::uint64_t seed = 1;
};

constexpr std::size_t kNoteSeeds = 5;

// Nonempty when pinning the pure-s diagonal entries changes the exact answer
// relative to the graph verdict.
std::optional<std::string> strict_mode_note(const StateSpacePattern& ss, Verdict verdict, std::uint64_t seed) {
  if (ss.states() > 6 || oracle::pure_monomial_entries(ss).empty()) return std::nullopt;
  const auto seeds = oracle::seed_range(seed, kNoteSeeds);
  const bool strict = oracle::oracle_zero_set_empty(ss, seeds, oracle::Mode::statespace_strict);
  if (strict == (verdict == Verdict::structurally_controllable)) return std::nullopt;
  const bool generic = oracle::oracle_zero_set_empty(ss, seeds, oracle::Mode::generic);
  const auto word = [](bool empty) { return empty ? "empty" : "nonempty"; };
  return std::string("the diagonal entries of sI - A with A_ii = 0 are exactly s; with them pinned the exact "
                     "oracle reports a ") +
         word(strict) + " zero set (mode statespace_strict) against " + word(generic) +
         " in mode generic. The graph verdict treats every diagonal entry as a generic degree-1 polynomial; "
         "see README, \"Pure-s diagonal entries\".";
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(report.verdict));
  j["minimal"] = report.minimal;
  j["term_rank"] = report.term_rank;
  auto redundant = nlohmann::json::array();
  for (const Edge& e : report.redundant_edges) redundant.push_back(pair_json(e.row, e.col));
  j["redundant_edges"] = std::move(redundant);
  auto components = nlohmann::json::array();
  for (const ComponentSummary& c : report.components) {
    nlohmann::json entry;
    entry["rows"] = one_based(c.rows);
    entry["cols"] = one_based(c.cols);
    entry["max_weight"] = c.max_weight ? nlohmann::json(*c.max_weight) : nlohmann::json(nullptr);
    components.push_back(std::move(entry));
  }
  j["components"] = std::move(components);
  if (report.witness) {
    j["witness"] = {{"component", report.witness->component + 1},
                    {"edge", pair_json(report.witness->edge.row, report.witness->edge.col)},
                    {"weight", report.witness->edge.weight}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const StateSpaceReport& report) {
  nlohmann::json j = to_json(report.base);
  j["state_connectivity"] = report.state_connected;
  return j;
}

void print_report(std::ostream& out, const AnalysisReport& report, bool quiet) {
  out << to_phrase(report.verdict) << '\n';
  if (quiet) return;
  out << "term rank: " << report.term_rank << (report.minimal ? " (minimal)" : " (non-minimal)") << '\n';
  out << "redundant edges:";
  if (report.redundant_edges.empty()) out << " none";
  for (const Edge& e : report.redundant_edges) out << ' ' << edge_text(e);
  out << '\n';
  out << "components: " << report.components.size() << '\n';
  for (std::size_t k = 0; k < report.components.size(); ++k) {
    const ComponentSummary& c = report.components[k];
    out << "  " << k + 1 << ": rows " << index_set(c.rows) << " cols " << index_set(c.cols) << " edges "
        << c.edge_count << " max weight ";
    if (c.max_weight) {
      out << *c.max_weight;
    } else {
      out << '-';
    }
    out << '\n';
  }
  if (report.witness) {
    out << "witness: component " << report.witness->component + 1 << ", edge " << edge_text(report.witness->edge)
        << " weight " << report.witness->edge.weight << '\n';
  }
}

std::vector<BenchResult> run_bench(const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  const auto seconds_since = [](Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  std::vector<BenchResult> rows;
  for (std::size_t k = 0; k < config.sizes.size(); ++k) {
    BenchResult row;
    row.p = config.sizes[k];
    row.v = std::max<Index>(1, static_cast<Index>(std::lround(config.cols_factor * row.p)));
    row.edge_count = static_cast<std::size_t>(std::lround(config.edges_factor * row.p));
    const PolyPattern p = gen_random_pattern(row.p, row.v, row.edge_count, config.max_degree, config.seed + k);

    AnalysisOptions selected;
    selected.reduction.mark_matched = config.optimized;
    AnalysisOptions other;
    other.reduction.mark_matched = !config.optimized;

    auto start = Clock::now();
    const ReducedGraph reduced = remove_redundant_edges(build_graph(p), selected.reduction);
    row.reduce_seconds = seconds_since(start);

    start = Clock::now();
    const AnalysisReport report = analyze(p, selected);
    row.total_seconds = seconds_since(start);

    start = Clock::now();
    const AnalysisReport cross = analyze(p, other);
    row.alt_total_seconds = seconds_since(start);

    row.verdict = report.verdict;
    row.verdicts_match = report.verdict == cross.verdict && report.redundant_edges == cross.redundant_edges &&
                         reduced.redundant == report.redundant_edges;
    row.timed_out = row.total_seconds > config.timeout_seconds;
    rows.push_back(row);
  }
  return rows;
}

void print_bench(std::ostream& out, const std::vector<BenchResult>& rows) {
  out << "p\tv\tedges\treduce_ms\ttotal_ms\talt_total_ms\tverdict\tstatus\n";
  out << std::fixed << std::setprecision(3);
  for (const BenchResult& r : rows) {
    const char* status = !r.verdicts_match ? "mismatch" : (r.timed_out ? "timeout" : "ok");
    out << r.p << '\t' << r.v << '\t' << r.edge_count << '\t' << r.reduce_seconds * 1e3 << '\t'
        << r.total_seconds * 1e3 << '\t' << r.alt_total_seconds * 1e3 << '\t' << to_string(r.verdict) << '\t'
        << status << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural controllability of polynomial kernel representations"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit JSON instead of text");
  app.add_flag("--quiet", flags.quiet, "Print only the verdict line");
  app.add_option("--seed", flags.seed, "Base random seed");

  std::string path;
  bool no_marking = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Decide structural controllability of a pattern file");
  analyze_cmd->add_option("path", path, "Pattern file")->required();
  analyze_cmd->add_flag("--plain-reduction", no_marking, "Classify every edge independently");
  analyze_cmd->fallthrough();

  auto* statespace_cmd = app.add_subcommand("statespace", "Analyze [sI - A, B] for a state-space file");
  statespace_cmd->add_option("path", path, "State-space file")->required();
  statespace_cmd->fallthrough();

  std::size_t seed_count = 5;
  std::int64_t coeff_range = 99;
  std::string mode_text = "generic";
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact gcd-of-minors check on random instantiations");
  oracle_cmd->add_option("path", path, "Pattern or state-space file")->required();
  oracle_cmd->add_option("--seeds", seed_count, "Number of instantiations")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--coeff-range", coeff_range, "Coefficients drawn from [-C,-1] U [1,C]")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--mode", mode_text, "generic | statespace_strict");
  oracle_cmd->fallthrough();

  std::string kind;
  Index n = 0, rows = 0, cols = 0;
  Degree n1 = 0, n2 = 0, max_degree = 2;
  std::size_t density_edges = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated pattern or state-space file");
  gen_cmd->add_option("kind", kind, "canonical | gilbert | series | parallel | feedback | random")->required();
  gen_cmd->add_option("--n", n, "State count (canonical, gilbert)");
  gen_cmd->add_option("--n1", n1, "Order of the first subsystem");
  gen_cmd->add_option("--n2", n2, "Order of the second subsystem");
  gen_cmd->add_option("--rows", rows, "Rows (random)");
  gen_cmd->add_option("--cols", cols, "Columns (random)");
  gen_cmd->add_option("--density-edges", density_edges, "Exact entry count (random)");
  gen_cmd->add_option("--max-degree", max_degree, "Largest entry degree (random)");
  gen_cmd->fallthrough();

  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the analysis on a ladder of random patterns");
  bench_cmd->add_option("--sizes", bench.sizes, "Row counts")->delimiter(',');
  bench_cmd->add_option("--edges-factor", bench.edges_factor, "Entries per row");
  bench_cmd->add_option("--cols-factor", bench.cols_factor, "Columns per row");
  bench_cmd->add_option("--max-degree", bench.max_degree, "Largest entry degree");
  bench_cmd->add_option("--timeout", bench.timeout_seconds, "Per-row limit on analysis time, seconds");
  bench_cmd->add_flag("--optimized", bench.optimized, "Report the edge-marking reduction");
  bench_cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (analyze_cmd->parsed()) {
      const PolyPattern p = parse_pattern(read_file(path));
      AnalysisOptions options;
      options.reduction.mark_matched = !no_marking;
      const AnalysisReport report = analyze(p, options);
      if (flags.json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        print_report(out, report, flags.quiet);
      }
      return verdict_status(report.verdict);
    }

    if (statespace_cmd->parsed()) {
      const StateSpacePattern ss = parse_statespace(read_file(path));
      AnalysisOptions options;
      options.reduction.mark_matched = true;
      const StateSpaceReport report = statespace_analyze(ss, options);
      const auto note = flags.quiet ? std::nullopt : strict_mode_note(ss, report.base.verdict, flags.seed);
      if (flags.json) {
        nlohmann::json j = to_json(report);
        j["note"] = note ? nlohmann::json(*note) : nlohmann::json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        print_report(out, report.base, flags.quiet);
        if (!flags.quiet) {
          out << "state connectivity:\n";
          for (std::size_t i = 0; i < report.state_connected.size(); ++i) {
            out << "  x" << i + 1 << ": " << (report.state_connected[i] ? "connected" : "not connected") << '\n';
          }
          if (note) out << "note: " << *note << '\n';
        }
      }
      return verdict_status(report.base.verdict);
    }

    if (oracle_cmd->parsed()) {
      const std::string text = read_file(path);
      oracle::OracleOptions options;
      options.instantiation.mode = oracle::parse_mode(mode_text);
      options.instantiation.coeff_bound = coeff_range;
      PolyPattern p;
      if (header_keyword(text) == "statespace") {
        const StateSpacePattern ss = parse_statespace(text);
        p = build_pencil_pattern(ss);
        options.instantiation.monomial_entries = oracle::pure_monomial_entries(ss);
      } else {
        if (options.instantiation.mode == oracle::Mode::statespace_strict) {
          throw InputError("mode statespace_strict needs a statespace file");
        }
        p = parse_pattern(text);
      }
      const auto seeds = oracle::seed_range(flags.seed, seed_count);
      const oracle::ZeroSetReport report = oracle::zero_set_report(p, seeds, options);
      const Verdict verdict =
          report.zero_set_empty ? Verdict::structurally_controllable : Verdict::structurally_uncontrollable;
      if (flags.json) {
        nlohmann::json j;
        j["verdict"] = std::string(to_string(verdict));
        j["mode"] = std::string(oracle::to_string(options.instantiation.mode));
        j["term_rank"] = report.term_rank;
        auto per_seed = nlohmann::json::array();
        for (const auto& s : report.seeds) {
          per_seed.push_back({{"seed", s.seed},
                              {"gcd_degree", s.gcd_degree ? nlohmann::json(*s.gcd_degree) : nlohmann::json(nullptr)}});
        }
        j["seeds"] = std::move(per_seed);
        j["zero_set_empty"] = report.zero_set_empty;
        out << j.dump(2) << '\n';
      } else {
        out << to_phrase(verdict) << '\n';
        if (!flags.quiet) {
          out << "mode: " << oracle::to_string(options.instantiation.mode) << '\n';
          out << "term rank: " << report.term_rank << '\n';
          for (const auto& s : report.seeds) {
            out << "seed " << s.seed << ": gcd degree ";
            if (s.gcd_degree) {
              out << *s.gcd_degree;
            } else {
              out << "undefined (all minors vanish)";
            }
            out << '\n';
          }
          out << "zero set: " << (report.zero_set_empty ? "empty" : "nonempty") << '\n';
        }
      }
      return verdict_status(verdict);
    }

    if (gen_cmd->parsed()) {
      const auto need = [&](bool ok, const char* what) {
        if (!ok) throw InputError(std::string("gen ") + kind + " needs " + what);
      };
      if (kind == "canonical" || kind == "gilbert") {
        need(n >= 1, "--n >= 1");
        out << emit_statespace(kind == "canonical" ? gen_controller_canonical(n) : gen_gilbert(n));
      } else if (kind == "random") {
        need(rows >= 1 && cols >= 1, "--rows and --cols >= 1");
        out << emit_pattern(gen_random_pattern(rows, cols, density_edges, max_degree, flags.seed));
      } else {
        const Interconnection which = parse_interconnection(kind);
        need(n1 >= 1 && n2 >= 1, "--n1 and --n2 >= 1");
        out << emit_pattern(gen_interconnection(which, n1, n2));
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      bench.seed = flags.seed;
      const auto results = run_bench(bench);
      if (flags.json) {
        auto j = nlohmann::json::array();
        for (const auto& r : results) {
          j.push_back({{"p", r.p},
                       {"v", r.v},
                       {"edges", r.edge_count},
                       {"reduce_seconds", r.reduce_seconds},
                       {"total_seconds", r.total_seconds},
                       {"alt_total_seconds", r.alt_total_seconds},
                       {"verdict", std::string(to_string(r.verdict))},
                       {"verdicts_match", r.verdicts_match},
                       {"timed_out", r.timed_out}});
        }
        out << j.dump(2) << '\n';
      } else {
        print_bench(out, results);
      }
      const bool ok = std::all_of(results.begin(), results.end(),
                                  [](const BenchResult& r) { return r.verdicts_match && !r.timed_out; });
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ZeroTermRankError& e) {
    err << "diagnostic: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    // InputError and GuardError
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace structctl::cli
