#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "structctl/pattern.hpp"
#include "test_support.hpp"

namespace structctl::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) { return std::string(STRUCTCTL_FIXTURES) + "/" + name; }

// Set STRUCTCTL_UPDATE_GOLDEN=1 to rewrite the expected files.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(STRUCTCTL_GOLDEN) / name;
  if (std::getenv("STRUCTCTL_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::ostringstream expected;
  expected << in.rdbuf();
  EXPECT_EQ(actual, expected.str()) << "golden mismatch: " << name;
}

struct GoldenCase {
  const char* golden;
  std::vector<std::string> args;
  int status;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.golden; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesExpectedOutput) {
  const GoldenCase& c = GetParam();
  const Outcome o = invoke(c.args);
  EXPECT_EQ(o.status, c.status) << o.err;
  expect_golden(c.golden, o.out);
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(
        GoldenCase{"analyze_coupled_2x3.txt", {"analyze", fixture_path("coupled_2x3.pat")}, kControllable},
        GoldenCase{"analyze_block_witness.txt", {"analyze", fixture_path("block_witness.pat")}, kUncontrollable},
        GoldenCase{"analyze_block_witness.json", {"--json", "analyze", fixture_path("block_witness.pat")},
                   kUncontrollable},
        GoldenCase{"statespace_chain_loop_x2.txt", {"statespace", fixture_path("chain_loop_x2.ss")}, kControllable},
        GoldenCase{"statespace_hidden_invariant.txt", {"statespace", fixture_path("hidden_invariant.ss")}, kControllable},
        GoldenCase{"statespace_unreachable.json", {"--json", "statespace", fixture_path("unreachable.ss")},
                   kUncontrollable},
        GoldenCase{"oracle_hidden_invariant_strict.txt",
                   {"oracle", fixture_path("hidden_invariant.ss"), "--mode", "statespace_strict"},
                   kUncontrollable},
        GoldenCase{"oracle_coupled_2x3.json", {"--json", "oracle", fixture_path("coupled_2x3.pat"), "--seeds", "2"}, kControllable},
        GoldenCase{"gen_canonical3.txt", {"gen", "canonical", "--n", "3"}, 0},
        GoldenCase{"gen_feedback_2_3.txt", {"gen", "feedback", "--n1", "2", "--n2", "3"}, 0},
        GoldenCase{"gen_random.txt", {"--seed", "7", "gen", "random", "--rows", "3", "--cols", "4",
                                      "--density-edges", "6"},
                   0}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.golden;
      for (char& ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
      }
      return name;
    });

TEST(Cli, QuietPrintsVerdictOnly) {
  const Outcome o = invoke({"--quiet", "analyze", fixture_path("scalar_degree1.pat")});
  EXPECT_EQ(o.status, kUncontrollable);
  EXPECT_EQ(o.out, "structurally uncontrollable\n");
}

TEST(Cli, FlagsAfterSubcommand) {
  const Outcome o = invoke({"analyze", fixture_path("coupled_2x3.pat"), "--quiet"});
  EXPECT_EQ(o.out, "structurally controllable\n");
}

TEST(Cli, PlainReductionGivesSameOutput) {
  const Outcome a = invoke({"analyze", fixture_path("block_witness.pat")});
  const Outcome b = invoke({"analyze", "--plain-reduction", fixture_path("block_witness.pat")});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.status, b.status);
}

TEST(Cli, ParseErrorExitsWithTwo) {
  const Outcome o = invoke({"analyze", fixture_path("malformed.pat")});
  EXPECT_EQ(o.status, kInputError);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("parse error: line 3"), std::string::npos) << o.err;
}

TEST(Cli, MissingFileExitsWithTwo) {
  const Outcome o = invoke({"analyze", fixture_path("does_not_exist.pat")});
  EXPECT_EQ(o.status, kInputError);
  EXPECT_NE(o.err.find("cannot open"), std::string::npos);
}

TEST(Cli, ZeroTermRankIsADiagnostic) {
  const fs::path tmp = fs::temp_directory_path() / "structctl_empty.pat";
  std::ofstream(tmp) << "pattern 2 2\n";
  const Outcome o = invoke({"analyze", tmp.string()});
  EXPECT_EQ(o.status, kInputError);
  EXPECT_NE(o.err.find("diagnostic: term rank is zero"), std::string::npos) << o.err;
  fs::remove(tmp);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).status, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).status, kInputError);
  EXPECT_EQ(invoke({"gen", "cascade", "--n1", "1", "--n2", "1"}).status, kInputError);
  EXPECT_EQ(invoke({"gen", "canonical"}).status, kInputError);
  EXPECT_EQ(invoke({"oracle", fixture_path("coupled_2x3.pat"), "--mode", "statespace_strict"}).status, kInputError);
  EXPECT_EQ(invoke({"oracle", fixture_path("coupled_2x3.pat"), "--mode", "bogus"}).status, kInputError);
}

TEST(Cli, JsonVerdictMatchesExitStatus) {
  for (const char* name : {"coupled_2x3.pat", "coupled_2x3_degree1.pat", "block_witness.pat", "scalar_degree1.pat"}) {
    const Outcome o = invoke({"--json", "analyze", fixture_path(name)});
    const auto j = nlohmann::json::parse(o.out);
    for (const char* key : {"verdict", "minimal", "term_rank", "redundant_edges", "components", "witness"}) {
      EXPECT_TRUE(j.contains(key)) << name << " " << key;
    }
    const bool controllable = j["verdict"] == "structurally_controllable";
    EXPECT_EQ(o.status, controllable ? kControllable : kUncontrollable) << name;
    EXPECT_EQ(j["witness"].is_null(), controllable) << name;
  }
}

TEST(Cli, GeneratedFilesRoundTrip) {
  const Outcome o = invoke({"gen", "gilbert", "--n", "4"});
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(emit_statespace(parse_statespace(o.out)), o.out);
  const Outcome s = invoke({"gen", "series", "--n1", "2", "--n2", "2"});
  EXPECT_EQ(emit_pattern(parse_pattern(s.out)), s.out);
}

TEST(Cli, RandomGenIsSeeded) {
  const std::vector<std::string> args{"--seed", "3", "gen", "random", "--rows", "4", "--cols", "5",
                                      "--density-edges", "8"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  auto other = args;
  other[1] = "4";
  EXPECT_NE(invoke(args).out, invoke(other).out);
}

TEST(Cli, BenchSmallLadder) {
  const Outcome o = invoke({"bench", "--sizes", "10,20", "--optimized"});
  EXPECT_EQ(o.status, 0) << o.out;
  std::istringstream lines(o.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "p\tv\tedges\treduce_ms\ttotal_ms\talt_total_ms\tverdict\tstatus");
  int count = 0;
  while (std::getline(lines, row)) {
    ++count;
    EXPECT_EQ(row.substr(row.rfind('\t') + 1), "ok");
  }
  EXPECT_EQ(count, 2);
}

TEST(Cli, HiddenInvariantNoteOnlyWhenStrictDisagrees) {
  EXPECT_NE(invoke({"statespace", fixture_path("hidden_invariant.ss")}).out.find("note: "), std::string::npos);
  EXPECT_EQ(invoke({"statespace", fixture_path("chain_loop_x2.ss")}).out.find("note: "), std::string::npos);
}

}  // namespace
}  // namespace structctl::cli
