#include "fixtures.hpp"

#include "tbnet/moddyn.hpp"

#include <gtest/gtest.h>

namespace tbnet {
namespace {

// Module 0 holds {a1, a2} then {a2, a3}: J_A = 1/3. Its HS side is {s1}
// then {s1}: J_B = 1. Module 1 is a single pair present in 2000 only.
struct Fixture {
  TemporalNetwork net = testing::make_network({{2000, "a1", "s1"}, {2000, "a2", "s1"}, {2000, "a9", "s9"},
                                               {2001, "a2", "s1"}, {2001, "a3", "s1"}});
  Partition partition() const {
    const auto& r = net.registry();
    auto A = [&](const char* id) { return *r.find(Guild::A, id); };
    auto B = [&](const char* id) { return *r.find(Guild::B, id); };
    return Partition({{A("a1"), 2000}, {A("a2"), 2000}, {B("s1"), 2000}, {A("a9"), 2000}, {B("s9"), 2000},
                      {A("a2"), 2001}, {A("a3"), 2001}, {B("s1"), 2001}},
                     {0, 0, 0, 1, 1, 0, 0, 0});
  }
};

TEST(Timelines, SizesAndDistinctCounts) {
  Fixture f;
  const auto t = module_timelines(f.net, f.partition());
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].first_year, 2000);
  EXPECT_EQ(t[0].last_year, 2001);
  EXPECT_EQ(t[0].size(Guild::A, 0), 2u);
  EXPECT_EQ(t[0].size(Guild::B, 1), 1u);
  EXPECT_EQ(t[0].distinct_A, 3u);
  EXPECT_EQ(t[0].distinct_B, 1u);
  EXPECT_EQ(t[1].years(), 1u);
}

TEST(Timelines, RejectsPartialPartition) {
  Fixture f;
  const Partition partial({{0, 2000}}, {0});
  EXPECT_THROW(module_timelines(f.net, partial), std::invalid_argument);
}

TEST(Jaccard, HandComputedValues) {
  Fixture f;
  const auto t = module_timelines(f.net, f.partition());
  const auto ja = jaccard_series(t[0], Guild::A);
  ASSERT_EQ(ja.size(), 1u);
  EXPECT_EQ(ja[0].year, 2001);
  EXPECT_DOUBLE_EQ(*ja[0].value, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(*jaccard_series(t[0], Guild::B)[0].value, 1.0);
  EXPECT_TRUE(jaccard_series(t[1], Guild::A).empty());
}

TEST(Jaccard, EmptyYearHasNoValue) {
  ModuleTimeline t;
  t.first_year = 2000;
  t.last_year = 2002;
  t.members_A = {{1, 2}, {}, {2}};
  t.members_B = {{5}, {5}, {5}};
  const auto j = jaccard_series(t, Guild::A);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_FALSE(j[0].value);
  EXPECT_FALSE(j[1].value);
}

TEST(Classify, MajorAboveThreeDistinctActors) {
  Fixture f;
  const auto t = module_timelines(f.net, f.partition());
  const ModuleClasses c = classify_modules(t);
  EXPECT_EQ(c.major, std::vector<int>{0});  // a1 a2 a3 s1: 4 > 3
  EXPECT_EQ(c.transitory, std::vector<int>{1});
  MajorRule strict;
  strict.min_B = 1;  // needs more than one HS
  EXPECT_TRUE(classify_modules(t, strict).major.empty());
}

TEST(SubmoduleCorrelation, CoherentTurnover) {
  ModuleTimeline t;
  t.first_year = 2000;
  t.last_year = 2004;
  // A side: stable, churn, stable, churn; B side follows the same pattern.
  t.members_A = {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 5, 6}, {1, 7, 8, 9}};
  t.members_B = {{10, 11}, {10, 11}, {10, 12}, {10, 12}, {13, 14}};
  const auto c = submodule_correlation(t);
  EXPECT_EQ(c.n, 4u);
  EXPECT_GT(c.rho, 0.9);
  ModuleTimeline short_t = t;
  short_t.members_A.resize(3);
  short_t.members_B.resize(3);
  short_t.last_year = 2002;
  EXPECT_THROW(submodule_correlation(short_t), std::invalid_argument);
}

}  // namespace
}  // namespace tbnet
