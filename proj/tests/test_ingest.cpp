#include "fixtures.hpp"

#include "tbnet/ingest.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace tbnet {
namespace {

using testing::TempDir;
using testing::write_file;

TEST(SupportTokens, CodesFlagsAndKinds) {
  FormatConfig cfg;
  cfg.passive_codes = {7};
  const auto t = parse_support_tokens("3; 7 ;2p;7a;active;PASSIVE", cfg);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[0].code, 3);
  EXPECT_TRUE(t[0].active);
  EXPECT_FALSE(t[1].active);  // listed as passive
  EXPECT_FALSE(t[2].active);
  EXPECT_TRUE(t[3].active);   // explicit flag wins
  EXPECT_EQ(t[4].code, 0);
  EXPECT_FALSE(t[5].active);
  EXPECT_THROW(parse_support_tokens("11", cfg), std::invalid_argument);
  EXPECT_THROW(parse_support_tokens("x", cfg), std::invalid_argument);
}

TEST(ParseCsv, ExpandsYearSpansAndOrsKinds) {
  TempDir dir("ingest");
  const auto path = dir.path() / "e.csv";
  write_file(path,
             "groupid,stateid,styear,endyear,types\n"
             "g1,s1,2000,2002,active\n"
             "g1,s1,2001,2001,passive\n"
             "g2,s1,2002,2002,3\r\n");
  const TemporalNetwork net = parse_edge_list(path);
  ASSERT_EQ(net.first_year(), 2000);
  ASSERT_EQ(net.last_year(), 2002);
  const auto& reg = net.registry();
  const ActorIndex g1 = *reg.find(Guild::A, "g1"), s1 = *reg.find(Guild::B, "s1");
  EXPECT_EQ(net.slice(2000).find(g1, s1), kActiveOnly);
  EXPECT_EQ(net.slice(2001).find(g1, s1), kBothKinds);
  EXPECT_EQ(net.slice(2002).link_count(), 2u);
}

TEST(ParseCsv, CanonicalActorOrderIndependentOfRowOrder) {
  TempDir dir("ingest");
  write_file(dir.path() / "x.csv", "groupid,stateid,styear,endyear,types\nz,s,2000,2000,1\na,t,2000,2000,1\n");
  write_file(dir.path() / "y.csv", "groupid,stateid,styear,endyear,types\na,t,2000,2000,1\nz,s,2000,2000,1\n");
  EXPECT_EQ(parse_edge_list(dir.path() / "x.csv"), parse_edge_list(dir.path() / "y.csv"));
}

TEST(ParseCsv, ErrorsNameTheLine) {
  TempDir dir("ingest");
  const auto path = dir.path() / "bad.csv";
  write_file(path, "groupid,stateid,styear,endyear,types\ng,s,2000,2000,1\ng,s,2003,2001,1\n");
  try {
    parse_edge_list(path);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  write_file(path, "groupid,stateid,styear,types\ng,s,2000,1\n");
  EXPECT_THROW(parse_edge_list(path), ParseError);
}

TEST(ParseJsonLines, SameNetworkAsCsv) {
  TempDir dir("ingest");
  write_file(dir.path() / "e.csv",
             "groupid,stateid,styear,endyear,types\n10,20,1990,1991,\"1;4p\"\n11,20,1991,1991,passive\n");
  write_file(dir.path() / "e.jsonl",
             "{\"groupid\": 10, \"stateid\": \"20\", \"styear\": 1990, \"endyear\": 1991, \"types\": [1, \"4p\"]}\n"
             "\n"
             "{\"groupid\": \"11\", \"stateid\": 20, \"styear\": \"1991\", \"endyear\": 1991, \"types\": \"passive\"}\n");
  EXPECT_EQ(parse_edge_list(dir.path() / "e.csv"), parse_edge_list(dir.path() / "e.jsonl"));
  write_file(dir.path() / "bad.jsonl", "{\"groupid\": 1}\n");
  EXPECT_THROW(parse_edge_list(dir.path() / "bad.jsonl"), ParseError);
}

TEST(ParseCsv, ConfiguredColumnNames) {
  TempDir dir("ingest");
  write_file(dir.path() / "cfg.txt", "[ingest]\ngroup_column = nag\nstate_column = hs\npassive_codes = 2, 5\n");
  write_file(dir.path() / "e.csv", "nag,hs,styear,endyear,types\ng,s,2000,2000,5\n");
  const FormatConfig cfg = FormatConfig::from_config(io::Config::load(dir.path() / "cfg.txt"));
  EXPECT_EQ(cfg.passive_codes, (std::set<int>{2, 5}));
  const TemporalNetwork net = parse_edge_list(dir.path() / "e.csv", cfg);
  EXPECT_EQ(net.slice(2000).links()[0].kind, kPassiveOnly);
}

TEST(EdgeList, WriteThenParseRoundTrips) {
  const TemporalNetwork net = testing::make_network({{2000, "g1", "s1", kActiveOnly},
                                                     {2001, "g1", "s1", kActiveOnly},
                                                     {2002, "g1", "s1", kPassiveOnly},
                                                     {2004, "g1", "s1", kActiveOnly},
                                                     {2001, "g2", "s1", kBothKinds},
                                                     {2004, "g2", "s2", kPassiveOnly}});
  TempDir dir("ingest");
  write_edge_list(net, dir.path() / "out.csv");
  EXPECT_EQ(parse_edge_list(dir.path() / "out.csv"), net);
}

// Two-slice fixture with hand-counted sizes:
//   2000: g1-s1, g1-s2, g2-s2  -> 2 NAG, 2 HS, 3 links, 1 component
//   2001: g1-s1, g3-s3         -> 2 NAG, 2 HS, 2 links, 2 components
TEST(Describe, HandCountedTwoSliceFixture) {
  const TemporalNetwork net = testing::make_network({{2000, "g1", "s1", kActiveOnly},
                                                     {2000, "g1", "s2", kPassiveOnly},
                                                     {2000, "g2", "s2", kBothKinds},
                                                     {2001, "g1", "s1", kActiveOnly},
                                                     {2001, "g3", "s3", kActiveOnly}});
  const auto d = describe(net);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].n_a, 2u);
  EXPECT_EQ(d[0].n_b, 2u);
  EXPECT_EQ(d[0].links, 3u);
  EXPECT_EQ(d[0].components, 1u);
  EXPECT_DOUBLE_EQ(*d[0].connectance, 0.75);
  ASSERT_TRUE(d[0].fractions);
  EXPECT_DOUBLE_EQ(d[0].fractions->active_only, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(d[0].fractions->passive_only, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(d[0].fractions->both, 1.0 / 3.0);
  EXPECT_EQ(d[1].links, 2u);
  EXPECT_EQ(d[1].components, 2u);
  EXPECT_DOUBLE_EQ(*d[1].connectance, 0.5);
}

TEST(Durations, CountsActiveYearsAndDegrees) {
  const TemporalNetwork net = testing::make_network({{2000, "g1", "s1"},
                                                     {2000, "g1", "s2"},
                                                     {2002, "g1", "s1"},
                                                     {2001, "g2", "s1"}});
  const auto ds = actor_durations(net, Guild::A);
  ASSERT_EQ(ds.size(), 2u);
  const auto& g1 = ds[0].actor == *net.registry().find(Guild::A, "g1") ? ds[0] : ds[1];
  EXPECT_EQ(g1.duration, 2);  // gap year does not count
  EXPECT_EQ(g1.max_degree, 2u);
  EXPECT_DOUBLE_EQ(g1.mean_degree, 1.5);
}

TEST(Survival, CcdfAtDistinctDurations) {
  const auto c = survival_ccdf({1, 1, 2, 4});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (std::pair<int, double>{1, 1.0}));
  EXPECT_EQ(c[1], (std::pair<int, double>{2, 0.5}));
  EXPECT_EQ(c[2], (std::pair<int, double>{4, 0.25}));
  EXPECT_THROW(survival_ccdf({}), std::invalid_argument);
}

TEST(DurationCorrelation, PerfectlyAlignedFixture) {
  // NAG i is present i years with i partners in its first year.
  std::vector<testing::LinkSpec> links;
  for (int i = 1; i <= 4; ++i) {
    for (int y = 0; y < i; ++y) links.push_back({2000 + y, "g" + std::to_string(i), "s0"});
    for (int p = 1; p < i; ++p) links.push_back({2000, "g" + std::to_string(i), "s" + std::to_string(p)});
  }
  const TemporalNetwork net = testing::make_network(links);
  const auto c = duration_degree_correlation(net, Guild::A);
  EXPECT_NEAR(c.rho, 1.0, 1e-12);
  EXPECT_EQ(c.n, 4u);
}

}  // namespace
}  // namespace tbnet
