#include "fixtures.hpp"

#include "cli/cli.hpp"
#include "tbnet/ingest.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>

namespace tbnet {
namespace {

namespace fs = std::filesystem;

int tbnet(std::vector<std::string> args) {
  args.insert(args.begin(), "tbnet");
  return cli::run(args);
}

std::map<std::string, std::string> tree_contents(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file() || e.path().filename() == "manifest.json") continue;
    out[fs::relative(e.path(), root).string()] = testing::read_file(e.path());
  }
  return out;
}

fs::path toy_edges(const fs::path& dir) {
  const TemporalNetwork net = testing::make_network({{2000, "g1", "s1", kActiveOnly},
                                                     {2000, "g1", "s2", kPassiveOnly},
                                                     {2000, "g2", "s2", kBothKinds},
                                                     {2001, "g1", "s1", kActiveOnly},
                                                     {2001, "g3", "s3", kActiveOnly}});
  write_edge_list(net, dir / "toy.csv");
  return dir / "toy.csv";
}

TEST(Cli, DescribeWritesHandCountedTable) {
  testing::TempDir dir("cli_describe");
  const fs::path out = dir.path() / "out";
  ASSERT_EQ(tbnet({"describe", "--input", toy_edges(dir.path()).string(), "-o", out.string()}), 0);
  EXPECT_EQ(testing::read_file(out / "describe.csv"),
            "year,n_NAG,n_HS,links,components,connectance,active_only,passive_only,both\n"
            "2000,2,2,3,1,0.75,0.3333333333333333,0.3333333333333333,0.3333333333333333\n"
            "2001,2,2,2,2,0.5,1,0,0\n");
  const auto manifest = nlohmann::json::parse(testing::read_file(out / "manifest.json"));
  EXPECT_EQ(manifest["command"], "describe");
  EXPECT_EQ(manifest["seed"], 1);
  EXPECT_FALSE(manifest["outputs"].empty());
  EXPECT_EQ(manifest["inputs"].size(), 1u);
}

TEST(Cli, SynthThenPipelineIsReproducible) {
  testing::TempDir dir("cli_pipeline");
  const fs::path synth = dir.path() / "synth";
  ASSERT_EQ(tbnet({"synth", "--years", "8", "--seed", "4", "-o", synth.string()}), 0);
  ASSERT_TRUE(fs::exists(synth / "edges.csv"));
  ASSERT_TRUE(fs::exists(synth / "ground_truth.jsonl"));
  std::vector<std::map<std::string, std::string>> runs;
  for (const char* name : {"p1", "p2"}) {
    const fs::path out = dir.path() / name;
    ASSERT_EQ(tbnet({"pipeline", "--input", (synth / "edges.csv").string(), "--seed", "9", "--threads", "2",
                     "--set", "consensus.ensemble_size=6", "--set", "nestedness.n_null=10", "-o", out.string()}),
              0);
    runs.push_back(tree_contents(out));
  }
  EXPECT_EQ(runs[0], runs[1]);
  for (const char* f : {"describe.csv", "partition.csv", "roles.csv", "nestedness.csv", "modules.json",
                        "nestedness_modularity.csv", "pipeline.json", "T_plus_HS.csv"}) {
    EXPECT_TRUE(runs[0].count(f)) << f;
  }
}

TEST(Cli, ExitCodes) {
  testing::TempDir dir("cli_exit");
  const std::string out = (dir.path() / "out").string();
  EXPECT_EQ(tbnet({}), 2);                                    // no subcommand
  EXPECT_EQ(tbnet({"describe", "--bogus", "-o", out}), 2);   // unknown option
  EXPECT_EQ(tbnet({"describe", "-o", out}), 2);              // missing --input
  EXPECT_EQ(tbnet({"synth", "--set", "no_equals_sign", "-o", out}), 2);
  testing::write_file(dir.path() / "bad.csv", "year,nag,hs,type\nnot_a_year,g1,s1,active\n");
  EXPECT_EQ(tbnet({"describe", "--input", (dir.path() / "bad.csv").string(), "-o", out}), 1);
  EXPECT_EQ(tbnet({"synth", "--years", "1", "-o", out}), 1);  // invalid config value
}

TEST(Cli, RolesRequiresPartition) {
  testing::TempDir dir("cli_roles");
  const std::string input = toy_edges(dir.path()).string();
  const fs::path out = dir.path() / "out";
  EXPECT_EQ(tbnet({"roles", "--input", input, "-o", out.string()}), 2);
  ASSERT_EQ(tbnet({"modularity", "--input", input, "-o", (dir.path() / "mod").string()}), 0);
  EXPECT_EQ(tbnet({"roles", "--input", input, "--partition", (dir.path() / "mod" / "partition.csv").string(),
                   "-o", out.string()}),
            0);
  EXPECT_TRUE(fs::exists(out / "roles.csv"));
}

}  // namespace
}  // namespace tbnet
