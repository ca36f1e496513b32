// Copyright 2026 The sunitary Authors
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

#include <gtest/gtest.h>

#include <set>

#include "support/cli_fixtures.hpp"

namespace sunitary {
namespace {

using nlohmann::json;
using testing::CliScenario;
using testing::RunResult;
using testing::ScratchDir;
using testing::run_cli;

const std::string kFixtures = SUNITARY_FIXTURE_DIR;

json parse_report(const RunResult& r) {
  return json::parse(r.out);
}

TEST(Cli, BasisOfIdentityHasDimensionFour) {
  const RunResult r = run_cli({"basis", kFixtures + "/identity2.json", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = parse_report(r);
  EXPECT_EQ(rep["command"], "basis");
  EXPECT_EQ(rep["verdict"]["dim"], 4);
  EXPECT_EQ(rep["inputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST(Cli, CpCheckOfTransposeExitsOne) {
  const RunResult r = run_cli({"cp-check", kFixtures + "/transpose2.json", "--json"});
  ASSERT_EQ(r.code, 1) << r.err;
  const json rep = parse_report(r);
  EXPECT_FALSE(rep["verdict"]["completely_positive"].get<bool>());
  EXPECT_NEAR(rep["verdict"]["min_eigenvalue"].get<double>(), -1.0, 1e-9);
}

TEST(Cli, RecoverPrintsConjugatingMatrix) {
  ScratchDir dir("recover");
  testing::Rng rng(501);
  const CMatrix V0 = testing::random_invertible(rng, 3);
  const CMatrix V0inv = V0.inverse();
  const std::string phi = dir.write_superop(
      "phi.json", testing::superop_from_function(
                      3, [&](const CMatrix& X) -> CMatrix { return V0 * X * V0inv; }));
  const RunResult r = run_cli({"--json", "recover", phi});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = parse_report(r);
  ASSERT_TRUE(rep["verdict"]["is_conjugation"].get<bool>());
  const CMatrix V = cli::matrix_from_json(rep["verdict"]["V"], "V");
  const CMatrix ratio = V * V0inv;
  const Complex lambda = ratio(0, 0);
  EXPECT_LT((ratio - lambda * identity(3)).norm(), 1e-8 * std::abs(lambda));
}

TEST(Cli, HumanReadableReportNamesVerdict) {
  const RunResult r = run_cli({"cp-check", kFixtures + "/transpose2.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("completely_positive"), std::string::npos);
  EXPECT_NE(r.out.find("min_eigenvalue"), std::string::npos);
}

TEST(Cli, EverySubcommandRunsOnValidInput) {
  const CliScenario sc("all");
  std::set<std::string> seen;
  for (const auto& [name, args] : sc.invocations) {
    std::vector<std::string> with_json = args;
    with_json.push_back("--json");
    const RunResult r = run_cli(with_json);
    EXPECT_TRUE(r.code == 0 || r.code == 1) << name << ": " << r.err;
    const json rep = parse_report(r);
    EXPECT_EQ(rep["command"], name);
    EXPECT_TRUE(rep.contains("verdict")) << name;
    seen.insert(name);
  }
  for (const cli::CommandInfo& c : cli::command_table()) {
    EXPECT_TRUE(seen.count(c.name)) << "no scenario for " << c.name;
  }
}

TEST(Cli, ExpectedVerdictsOnScenario) {
  const CliScenario sc("verdicts");
  const auto code = [&](const std::string& name) { return run_cli(sc.invocations.at(name)).code; };
  EXPECT_EQ(code("basis"), 0);
  EXPECT_EQ(code("complex-structure"), 0);
  EXPECT_EQ(code("cp-check"), 0);
  EXPECT_EQ(code("kraus"), 0);
  EXPECT_EQ(code("intertwine"), 0);
  EXPECT_EQ(code("recover"), 0);
  EXPECT_EQ(code("iso-check"), 0);
  EXPECT_EQ(code("stab-conjugacy"), 0);
  EXPECT_EQ(code("jacobi"), 0);
  EXPECT_EQ(code("member"), 1);
  EXPECT_EQ(code("channel-props"), 1);
  EXPECT_EQ(code("coincide"), 1);
}

TEST(Cli, JsonReportsAreDeterministic) {
  const CliScenario sc("determinism");
  for (const auto& [name, args] : sc.invocations) {
    std::vector<std::string> with_json = args;
    with_json.push_back("--json");
    const RunResult first = run_cli(with_json);
    const RunResult second = run_cli(with_json);
    EXPECT_EQ(first.out, second.out) << name;
    EXPECT_EQ(first.code, second.code) << name;
  }
}

TEST(Cli, CoverageAudit) {
  for (const std::string& op : testing::audited_operations()) {
    EXPECT_EQ(testing::commands_exposing(op), 1) << op;
  }
  std::set<std::string> names;
  for (const cli::CommandInfo& c : cli::command_table()) {
    EXPECT_TRUE(names.insert(c.name).second) << "duplicate " << c.name;
    EXPECT_FALSE(c.operations.empty()) << c.name;
  }
}

TEST(Cli, MapFormsRoundtrip) {
  ScratchDir dir("convert");
  testing::Rng rng(502);
  const CMatrix A = testing::random_matrix(rng, 2), B = testing::random_matrix(rng, 2);
  const CMatrix C = testing::random_matrix(rng, 2), D = testing::random_matrix(rng, 2);
  const std::string pairs = dir.write_pairs("pairs.json", {{A, B}, {C, D}});
  const MapRep original = MapRep::from_kraus_pairs({{A, B}, {C, D}});

  const std::string as_superop = dir.file("superop.json");
  ASSERT_EQ(run_cli({"convert", pairs, "--to", "superop", "-o", as_superop}).code, 0);
  const MapRep from_superop =
      cli::map_from_json(cli::load_json_file(as_superop).document, "superop");
  EXPECT_TRUE(from_superop.has_superoperator());
  EXPECT_LT(map_distance(original, from_superop), 1e-12);

  const std::string as_pairs = dir.file("pairs_again.json");
  ASSERT_EQ(run_cli({"convert", as_superop, "--to", "kraus_pairs", "-o", as_pairs}).code, 0);
  const MapRep from_pairs = cli::map_from_json(cli::load_json_file(as_pairs).document, "pairs");
  EXPECT_TRUE(from_pairs.has_kraus_pairs());
  EXPECT_LT(map_distance(original, from_pairs), 1e-9);
}

TEST(Cli, HandWrittenMatrixFile) {
  ScratchDir dir("literal");
  const std::string s = dir.write_text(
      "S.json", R"({"rows": 2, "cols": 2, "data": [[1, 0], [0, 0], [0, 0], [1, 0]]})");
  const std::string x = dir.write_text(
      "X.json", R"({"rows": 2, "cols": 2, "data": [[0, 1], [1, 0], [-1, 0], [0, 0]]})");
  // X = [[i, 1], [-1, 0]] is skew-Hermitian.
  EXPECT_EQ(run_cli({"member", s, x}).code, 0);
}

TEST(Cli, MalformedJsonReportsLineAndColumn) {
  ScratchDir dir("malformed");
  const std::string bad = dir.write_text("bad.json", "{\n  \"rows\": 2,\n  \"cols\": ]\n}\n");
  const RunResult r = run_cli({"basis", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(bad + ":3:"), std::string::npos) << r.err;
}

TEST(Cli, SchemaErrorsExitTwo) {
  ScratchDir dir("schema");
  const std::string short_data =
      dir.write_text("short.json", R"({"rows": 2, "cols": 2, "data": [[1, 0]]})");
  EXPECT_EQ(run_cli({"basis", short_data}).code, 2);
  const std::string not_square =
      dir.write_text("rect.json", R"({"rows": 1, "cols": 2, "data": [[1, 0], [0, 0]]})");
  EXPECT_EQ(run_cli({"basis", not_square}).code, 2);
  const std::string no_map = dir.write_text("nomap.json", R"({"matrix": 1})");
  EXPECT_EQ(run_cli({"choi", no_map}).code, 2);
}

TEST(Cli, DimensionMismatchExitsTwo) {
  ScratchDir dir("mismatch");
  const std::string s2 = dir.write_matrix("s2.json", identity(2));
  const std::string x3 = dir.write_matrix("x3.json", identity(3));
  const RunResult r = run_cli({"member", s2, x3});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DimensionError"), std::string::npos) << r.err;
}

TEST(Cli, NumericalFailureNamesTheError) {
  ScratchDir dir("singular");
  const std::string s = dir.write_matrix("s.json", identity(2));
  const std::string x = dir.write_matrix("x.json", CMatrix::Zero(2, 2));
  const RunResult r = run_cli({"--json", "member", "--group", s, x});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SingularMatrixError"), std::string::npos) << r.err;
  EXPECT_EQ(parse_report(r)["error"]["type"], "SingularMatrixError");
}

TEST(Cli, NonPositiveInputToKrausExitsTwo) {
  const RunResult r = run_cli({"kraus", kFixtures + "/transpose2.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotPositiveError"), std::string::npos) << r.err;
}

TEST(Cli, ToleranceFlags) {
  const RunResult r = run_cli({"--json", "--tol", "1e-6", "--rank-tol", "1e-8", "basis",
                               kFixtures + "/identity2.json"});
  ASSERT_EQ(r.code, 0);
  const json rep = parse_report(r);
  EXPECT_DOUBLE_EQ(rep["tolerances"]["residual"].get<double>(), 1e-6);
  EXPECT_DOUBLE_EQ(rep["tolerances"]["rank_cutoff"].get<double>(), 1e-8);

  EXPECT_EQ(run_cli({"--tol", "-1", "basis", kFixtures + "/identity2.json"}).code, 2);
  EXPECT_EQ(run_cli({"--tol", "abc", "basis", kFixtures + "/identity2.json"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"basis"}).code, 2);
  EXPECT_EQ(run_cli({"convert", kFixtures + "/identity2.json", "--to", "choi"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, JacobiSweepListsWorstTriples) {
  ScratchDir dir("jacobi");
  CMatrix D = CMatrix::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = 2.0;
  const std::string psi = dir.write_pairs("right.json", {{identity(2), D.adjoint()}});
  const RunResult r = run_cli({"--json", "jacobi", psi, "--sweep", "3"});
  EXPECT_EQ(r.code, 1);
  const json rep = parse_report(r);
  EXPECT_EQ(rep["verdict"]["worst"].size(), 3u);
  EXPECT_NEAR(rep["verdict"]["jacobi"]["residual"].get<double>(), std::sqrt(5.0), 1e-12);
}

}  // namespace
}  // namespace sunitary
