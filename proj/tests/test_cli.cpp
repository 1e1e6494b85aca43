#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the tool with a shell-quoted argument string; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(STICKFORGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(STICKFORGE_DATA_DIR) + "/" + rel; }
std::string catalog_flag() { return "--catalog " + data("knots.csv"); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "stickforge_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, NoSubcommandIsUsageError) { EXPECT_EQ(run("").code, 2); }

TEST(Cli, HelpSucceeds) { EXPECT_EQ(run("--help").code, 0); }

TEST(Cli, TwoStickCycleIsUsageError) { EXPECT_EQ(run("enumerate --graph cycle --sticks 2").code, 2); }

TEST(Cli, UnknownGraphIsUsageError) { EXPECT_EQ(run("enumerate --graph star --sticks 5").code, 2); }

TEST(Cli, StickCeilingExceeded) { EXPECT_EQ(run("enumerate --graph cycle --sticks 9").code, 3); }

TEST(Cli, BadLoopsIsUsageError) { EXPECT_EQ(run("enumerate --graph bouquet --sticks 7 --loops 3,3").code, 2); }

TEST(Cli, MissingCatalog) {
  EXPECT_EQ(run("bounds --knot 3_1 --catalog /nonexistent/catalog.json").code, 4);
  EXPECT_EQ(run("bounds --knot 3_1", "cd " + fs::temp_directory_path().string() + " && STICKFORGE_CATALOG=").code, 4);
}

TEST(Cli, MissingPdFile) { EXPECT_EQ(run("invariants --pd /nonexistent.pd").code, 4); }

TEST(Cli, MalformedPdIsUsageError) { EXPECT_EQ(run("invariants --pd '[(1,2,3)]'").code, 2); }

TEST(Cli, FiveStickEnumerateThenClassify) {
  const auto shadows = scratch("cycle5.jsonl");
  const auto r = run("enumerate --graph cycle --sticks 5 --grid 8 --out " + shadows.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2 irreducible nontrivial"), std::string::npos) << r.out;
  const auto c = run("classify --format csv --shadows " + shadows.string() + " " + catalog_flag());
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "shadow_code,crossings,names");
  EXPECT_NE(c.out.find("\"*\",,\"0_1 3_1 5_1\"\n"), std::string::npos) << c.out;
}

TEST(Cli, ClassifyEmptyInput) {
  const auto empty = scratch("empty.jsonl");
  write(empty, "");
  const auto r = run("classify --format csv --shadows " + empty.string() + " " + catalog_flag());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "shadow_code,crossings,names\n\"*\",,\"\"\n");
}

TEST(Cli, ClassifyWithoutCatalog) {
  const auto empty = scratch("empty2.jsonl");
  write(empty, "");
  EXPECT_EQ(run("classify --shadows " + empty.string() + " --catalog /nonexistent.json").code, 4);
}

TEST(Cli, EnumerateIsDeterministicAcrossJobs) {
  const auto a = run("enumerate --graph cycle --sticks 5 --grid 8 --jobs 1");
  const auto b = run("enumerate --graph cycle --sticks 5 --grid 8 --jobs 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, EmitCoords) {
  const auto r = run("enumerate --graph cycle --sticks 3 --grid 4 --emit-coords");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"coords\":[["), std::string::npos) << r.out;
}

TEST(Cli, InvariantsOfTrefoil) {
  const auto r = run("invariants --format csv --pd '[(1,5,2,4),(3,1,4,6),(5,3,6,2)]'");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(",3,9,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(",true\n"), std::string::npos) << r.out;
}

TEST(Cli, BoundsForCatalogKnot) {
  const auto r = run("bounds --format csv --knot 8_20 " + catalog_flag());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "knot,lb1,lb2,ub\n8_20,6,7,7\n");
}

TEST(Cli, BoundsWithoutCatalogInputs) {
  const auto r = run("bounds --format csv --crossing-number 8 --profile 2:7");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lb1,pl,crossing_ceiling\n6,7,14\n");
  EXPECT_EQ(run("bounds").code, 2);
  EXPECT_EQ(run("bounds --profile 4:1 --pl 4").code, 2);
}

TEST(Cli, TricolorFixtures) {
  const auto r = run("tricolor --format csv --graph bouquet --pd " + data("fixtures/6k19.pd"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(",true\n"), std::string::npos) << r.out;
  EXPECT_EQ(run("tricolor --graph theta --pd " + data("fixtures/kinoshita.pd")).code, 2);
  EXPECT_EQ(run("tricolor --graph knot --pd " + data("fixtures/6k19.pd")).code, 2);
}

TEST(Cli, ConstituentsOfKinoshita) {
  const auto r = run("constituents --format csv --pd " + data("fixtures/kinoshita.pd") + " " + catalog_flag());
  ASSERT_EQ(r.code, 0);
  int unknots = 0;
  for (std::size_t at = 0; (at = r.out.find(",0_1\n", at)) != std::string::npos; ++at) ++unknots;
  EXPECT_EQ(unknots, 3) << r.out;
}

TEST(Cli, AssignmentsOnPrintedFixture) {
  const auto r = run("assignments --format csv --pd " + data("fixtures/8_19.pd") + " " + catalog_flag());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n8_19,"), std::string::npos);
  EXPECT_EQ(run("assignments --ceiling 5 --pd " + data("fixtures/8_19.pd") + " " + catalog_flag()).code, 3);
}

TEST(Cli, ConfigPrecedence) {
  const auto good = data("knots.csv");
  const auto cfg_good = scratch("good.conf");
  const auto cfg_bad = scratch("bad.conf");
  write(cfg_good, "catalog=" + good + "\n");
  write(cfg_bad, "catalog=/nonexistent/from_config.json\n");
  const std::string cmd = "bounds --format csv --knot 3_1";
  // Environment alone.
  EXPECT_EQ(run(cmd, "STICKFORGE_CATALOG=" + good).code, 0);
  // Config overrides the environment, in both directions.
  EXPECT_EQ(run(cmd + " --config " + cfg_bad.string(), "STICKFORGE_CATALOG=" + good).code, 4);
  EXPECT_EQ(run(cmd + " --config " + cfg_good.string(), "STICKFORGE_CATALOG=/nonexistent.json").code, 0);
  // Flags override the config.
  EXPECT_EQ(run(cmd + " --config " + cfg_bad.string() + " --catalog " + good).code, 0);
  EXPECT_EQ(run(cmd + " --config " + cfg_good.string() + " --catalog /nonexistent.json").code, 4);
}

TEST(Cli, CatalogBuildRoundTrip) {
  const auto out = scratch("catalog.json");
  const auto r = run("catalog build --source " + data("knots.csv") + " --out " + out.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "250 records, 5 ambiguity sets\n");
  const auto b = run("bounds --format csv --knot 8_20 --catalog " + out.string());
  EXPECT_EQ(b.out, "knot,lb1,lb2,ub\n8_20,6,7,7\n");
}
