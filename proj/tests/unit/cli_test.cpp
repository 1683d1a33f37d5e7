#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"
#include "test_util.hpp"
#include "weyllab/error.hpp"
#include "weyllab/model_file.hpp"

namespace weyl {
namespace {

using namespace weyl::test;
using cli::CommandResult;
using cli::runCommand;
using nlohmann::json;
namespace wj = weyl::json;

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("WEYLLAB_FIXTURES");
  return std::string(dir ? dir : "tests/fixtures") + "/" + name + ".model";
}

std::string lastLine(const std::string& text) {
  std::string t = text;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.find_last_of('\n') + 1);
}

TEST(Cli, SnapshotJsonHasEveryKeyAndRoundTrips) {
  CommandResult r = runCommand({"snapshot", fixture("shift"), "--json"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  json doc = json::parse(r.out);
  SpectralSnapshot s = snapshot(OperatorModel{{shiftFwd(z("0"), q("1"))}, ""});
  ASSERT_EQ(doc.size(), kAllSets.size());
  for (SetId id : kAllSets) {
    const json& cells = doc.at(std::string(setName(id)));
    std::vector<Cell> back;
    for (const json& c : cells) back.push_back(wj::cellFromJson(c));
    EXPECT_EQ(normalize(back), s[id]) << setName(id);
  }
}

TEST(Cli, SnapshotText) {
  CommandResult r = runCommand({"snapshot", fixture("q_plus_zero")});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  EXPECT_NE(r.out.find("model q_plus_zero"), std::string::npos);
  EXPECT_NE(r.out.find("sigmaW"), std::string::npos);
}

TEST(Cli, ProfileJson) {
  CommandResult r = runCommand({"profile", fixture("q_plus_zero"), "--json"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  json doc = json::parse(r.out);
  ASSERT_EQ(doc.size(), 24u);
  for (const json& row : doc) {
    if (row["svf"] == "Phi_W") EXPECT_TRUE(row["partitionsSigma"].get<bool>());
    if (row["svf"] == "Phi_gW") EXPECT_FALSE(row["partitionsSigma"].get<bool>());
    EXPECT_TRUE(row.contains("part1") && row.contains("part2"));
  }
}

TEST(Cli, VerifyFixtures) {
  for (const char* name : {"q_plus_zero", "shift", "jordan_0_2_plus_1_1", "jordan_nilpotent", "shift_with_eigenvalue"}) {
    CommandResult r = runCommand({"verify", fixture(name)});
    EXPECT_EQ(r.exitCode, 0) << name << r.err;
    EXPECT_NE(lastLine(r.out).find(", 0 violations"), std::string::npos) << name;
    EXPECT_EQ(r.out.rfind("partitions sigma:", 0), 0u);
  }
}

TEST(Cli, VerifyJsonRows) {
  CommandResult r = runCommand({"verify", fixture("q_plus_zero"), "--json"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  json doc = json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  bool sawRegistry = false;
  for (const json& row : doc) {
    for (const char* key : {"theorem", "pair", "hypothesesMet", "conditionHolds", "conclusionHolds", "verdict", "witnesses"})
      ASSERT_TRUE(row.contains(key)) << key;
    EXPECT_EQ(row["verdict"], "consistent");
    if (row["theorem"] == "Phi_gW=>Phi_W") {
      sawRegistry = true;
      EXPECT_FALSE(row["conditionHolds"].get<bool>());
      EXPECT_TRUE(row["conclusionHolds"].get<bool>());
    }
  }
  EXPECT_TRUE(sawRegistry);
  CommandResult all = runCommand({"verify", fixture("q_plus_zero"), "--json", "--all"});
  EXPECT_GT(json::parse(all.out).size(), doc.size());
}

TEST(Cli, DecideCatalog) {
  CommandResult r = runCommand({"decide", "--theorem", "all", "--json"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  json doc = json::parse(r.out);
  ASSERT_EQ(doc.size(), 10u);
  for (const json& v : doc) {
    EXPECT_EQ(v["forward"], "Valid");
    EXPECT_EQ(v["backward"], "Valid");
    EXPECT_FALSE(v.contains("counterAtom"));
  }
  CommandResult text = runCommand({"decide", "--theorem", "T45"});
  EXPECT_EQ(text.exitCode, 0);
  EXPECT_NE(text.out.find("forward Valid  backward Valid"), std::string::npos);
}

TEST(Cli, DecideMutantReportsTheCounterAtom) {
  CommandResult r = runCommand({"decide", "--theorem", "T21", "--drop-hypothesis", "order", "--json"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["id"], "T21");
  EXPECT_EQ(doc["backward"], "CounterAtom");
  const json& atom = doc["counterAtom"]["backward"];
  EXPECT_TRUE(atom["sigma"].get<bool>());
  EXPECT_TRUE(atom["sigmaA"].get<bool>());
  EXPECT_TRUE(atom["Phi1"].get<bool>());
  EXPECT_FALSE(atom["Phi2"].get<bool>());
  EXPECT_FALSE(atom["Psi1"].get<bool>());
  EXPECT_FALSE(atom["Psi2"].get<bool>());

  CommandResult weak = runCommand({"decide", "--theorem", "T41", "--weaken-disjoint"});
  EXPECT_EQ(weak.exitCode, 0);
  EXPECT_NE(weak.out.find("CounterAtom"), std::string::npos);
}

TEST(Cli, SearchTarget) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "weyllab_cli_test";
  std::filesystem::remove_all(dir);
  CommandResult r = runCommand({"search", "--seed", "42", "--count", "100", "--target", "Phi_W.sigma & !Phi_gW.sigma",
                                "--artifacts", dir.string(), "--json"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  json doc = json::parse(r.out);
  ASSERT_TRUE(doc["found"].get<bool>());
  std::size_t index = doc["index"];
  std::ifstream in(dir / ("counterexample-" + std::to_string(index) + ".model"));
  ASSERT_TRUE(in);
  std::stringstream text;
  text << in.rdbuf();
  GenConfig cfg;
  EXPECT_EQ(parseModelFile(text.str()).atoms, generateModel(cfg, index).atoms);
  std::filesystem::remove_all(dir);

  CommandResult expectNone =
      runCommand({"search", "--seed", "42", "--count", "100", "--target", "Phi_W.sigma & !Phi_gW.sigma", "--expect-none"});
  EXPECT_EQ(expectNone.exitCode, 1);
  CommandResult none = runCommand(
      {"search", "--seed", "42", "--count", "100", "--target", "Psi_aW.sigmaA & !Phi_W.sigma", "--expect-none"});
  EXPECT_EQ(none.exitCode, 0);
}

TEST(Cli, SearchCorpus) {
  CommandResult r = runCommand({"search", "--seed", "1", "--count", "30", "--json"});
  ASSERT_EQ(r.exitCode, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["modelsRun"], 30);
  EXPECT_TRUE(doc["violations"].empty());
  EXPECT_EQ(doc["stats"].size(), 24u);
}

TEST(Cli, ErrorsExitTwo) {
  const std::vector<std::vector<std::string>> cases = {
      {"frobnicate"},
      {},
      {"snapshot"},
      {"snapshot", fixture("bad_denominator")},
      {"snapshot", fixture("empty")},
      {"verify", fixture("does_not_exist")},
      {"decide", "--theorem", "T99"},
      {"decide", "--theorem", "T21", "--drop-hypothesis", "nonsense"},
      {"search", "--seed", "1", "--count", "5", "--target", "Phi_W.rho"},
      {"search", "--seed", "x", "--count", "5"},
  };
  for (const auto& args : cases) {
    CommandResult r = runCommand(args);
    EXPECT_EQ(r.exitCode, 2) << (args.empty() ? "<none>" : args[0]);
    EXPECT_FALSE(r.err.empty());
  }
  CommandResult bad = runCommand({"snapshot", fixture("bad_denominator")});
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);
  EXPECT_NE(bad.err.find("ZeroDenominator"), std::string::npos);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, TableAndJsonAgree) {
  for (const char* name : {"q_plus_zero", "shift", "jordan_nilpotent", "shift_with_eigenvalue"}) {
    json profile = json::parse(runCommand({"profile", fixture(name), "--json"}).out);
    std::vector<std::string> table = lines(runCommand({"profile", fixture(name)}).out);
    ASSERT_EQ(table.size(), profile.size() + 1) << name;
    for (std::size_t k = 0; k < profile.size(); ++k) {
      std::istringstream row(table[k + 1]);
      std::string svf, sigma, sigmaA;
      row >> svf >> sigma >> sigmaA;
      EXPECT_EQ(svf, profile[k]["svf"].get<std::string>());
      EXPECT_EQ(sigma == "yes", profile[k]["partitionsSigma"].get<bool>()) << name << " " << svf;
      EXPECT_EQ(sigmaA == "yes", profile[k]["partitionsSigmaA"].get<bool>()) << name << " " << svf;
    }

    json report = json::parse(runCommand({"verify", fixture(name), "--json"}).out);
    std::string text = runCommand({"verify", fixture(name)}).out;
    EXPECT_EQ(lastLine(text), std::to_string(report.size()) + " rows, 0 violations") << name;
    std::size_t rows = 0;
    for (const std::string& line : lines(text)) rows += line.find("  hyp=") != std::string::npos;
    EXPECT_EQ(rows, report.size()) << name;

    json snap = json::parse(runCommand({"snapshot", fixture(name), "--json"}).out);
    std::vector<std::string> snapTable = lines(runCommand({"snapshot", fixture(name)}).out);
    ASSERT_EQ(snapTable.size(), kAllSets.size() + 1) << name;
    for (std::size_t k = 0; k < kAllSets.size(); ++k) {
      std::vector<Cell> cells;
      for (const json& c : snap.at(std::string(setName(kAllSets[k])))) cells.push_back(wj::cellFromJson(c));
      std::ostringstream shown;
      shown << normalize(cells);
      EXPECT_NE(snapTable[k + 1].find(shown.str()), std::string::npos) << snapTable[k + 1];
      EXPECT_EQ(snapTable[k + 1].rfind(std::string(setName(kAllSets[k])), 0), 0u);
    }
  }
}

TEST(Cli, Help) {
  CommandResult r = runCommand({"--help"});
  EXPECT_EQ(r.exitCode, 0);
  EXPECT_NE(r.out.find("decide"), std::string::npos);
}

TEST(CellJson, RoundTrip) {
  std::vector<Cell> cells = {pt("1/2-3i"),
                             seq("1", "i", 3, {4, 7}),
                             circle("0", "2", {z("2"), z("-2i")}),
                             annulus("1", "0", "1/2", {z("1+1/4i")}, {seq("1", "1/4")}),
                             annulus("6", "1/3", "2")};
  for (const Cell& c : cells) {
    Cell back = wj::cellFromJson(wj::toJson(c));
    EXPECT_EQ(normalize({back}), normalize({c})) << describe(c);
  }
}

TEST(CellJson, RejectsMalformedInput) {
  for (const char* text : {R"({"kind":"blob"})", R"({"kind":"point","re":"1"})", R"({"kind":"point","re":1,"im":"0"})",
                           R"({"kind":"circle","a":["0"],"rho":"1","excl":[]})", R"([1,2])"}) {
    try {
      wj::cellFromJson(json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SyntaxError) << text;
    }
  }
}

}  // namespace
}  // namespace weyl
