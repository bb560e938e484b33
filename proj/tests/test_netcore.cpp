#include "fixtures.hpp"

#include "tbnet/netcore.hpp"

#include <gtest/gtest.h>

namespace tbnet {
namespace {

using testing::make_network;

TEST(Registry, SameIdInBothGuildsIsTwoActors) {
  ActorRegistry reg;
  const auto a = reg.add(Guild::A, "x");
  const auto b = reg.add(Guild::B, "x");
  EXPECT_NE(a, b);
  EXPECT_EQ(reg.add(Guild::A, "x"), a);
  EXPECT_EQ(reg.find(Guild::B, "x"), b);
  EXPECT_FALSE(reg.find(Guild::B, "y"));
}

TEST(Builder, MergesRepeatedLinksByOr) {
  NetworkBuilder b;
  const auto a = b.add_actor(Guild::A, "a");
  const auto s = b.add_actor(Guild::B, "s");
  b.add_link(2000, a, s, kActiveOnly);
  b.add_link(2000, s, a, kPassiveOnly);  // reversed order is accepted
  const TemporalNetwork net = b.build();
  ASSERT_EQ(net.slice(2000).link_count(), 1u);
  EXPECT_EQ(net.slice(2000).links()[0].kind, kBothKinds);
}

TEST(Builder, RejectsSameGuildAndEmptyKind) {
  NetworkBuilder b;
  const auto a0 = b.add_actor(Guild::A, "a0");
  const auto a1 = b.add_actor(Guild::A, "a1");
  const auto s = b.add_actor(Guild::B, "s");
  EXPECT_THROW(b.add_link(2000, a0, a1, kActiveOnly), std::invalid_argument);
  EXPECT_THROW(b.add_link(2000, a0, s, LinkKind{}), std::invalid_argument);
}

TEST(Builder, FillsGapYearsWithEmptySlices) {
  const TemporalNetwork net = make_network({{2000, "a", "s"}, {2003, "a", "s"}});
  EXPECT_EQ(net.slice_count(), 4u);
  EXPECT_TRUE(net.slice(2001).empty());
  EXPECT_FALSE(net.slice(2001).present(0));
  EXPECT_THROW(net.slice(2004), std::out_of_range);
}

TEST(Slice, DegreesNeighborsAndKindFilter) {
  const TemporalNetwork net = make_network({{2000, "a", "s", kActiveOnly},
                                            {2000, "a", "t", kPassiveOnly},
                                            {2000, "b", "t", kBothKinds}});
  const auto& reg = net.registry();
  const ActorIndex a = *reg.find(Guild::A, "a"), t = *reg.find(Guild::B, "t");
  const Slice& s = net.slice(2000);
  EXPECT_EQ(s.degree(a), 2u);
  EXPECT_EQ(s.degree(t), 2u);
  EXPECT_EQ(degree(net, a, 2000, kActiveOnly), 1u);
  EXPECT_EQ(degree(net, t, 2000, kPassiveOnly), 2u);
  EXPECT_EQ(degree(net, t, 2000, kActiveOnly), 1u);
  const auto nb = s.neighbors(t);
  ASSERT_EQ(nb.size(), 2u);
  EXPECT_LT(nb[0], nb[1]);
  EXPECT_EQ(s.find(a, t), kPassiveOnly);
}

TEST(Connectance, KnownValuesAndAbsentGuild) {
  // 2 x 2 with 3 links
  const TemporalNetwork net = make_network({{2000, "a", "s"}, {2000, "a", "t"}, {2000, "b", "t"}, {2002, "a", "s"}});
  EXPECT_DOUBLE_EQ(*connectance(net, 2000), 0.75);
  EXPECT_DOUBLE_EQ(*connectance(net, 2002), 1.0);
  EXPECT_FALSE(connectance(net, 2001));
}

TEST(Components, CountsPresentActorsOnly) {
  const TemporalNetwork net = make_network({{2000, "a", "s"}, {2000, "b", "t"}, {2000, "c", "t"}, {2001, "a", "s"}});
  EXPECT_EQ(component_count(net, 2000), 2u);
  EXPECT_EQ(component_count(net, 2001), 1u);
}

TEST(Projection, KeepsOnlyRequestedKindAndIsIdempotent) {
  const TemporalNetwork net = make_network({{2000, "a", "s", kActiveOnly},
                                            {2000, "a", "t", kPassiveOnly},
                                            {2000, "b", "t", kBothKinds}});
  const TemporalNetwork active = project_subnetwork(net, Projection::ActiveOnly);
  ASSERT_EQ(active.slice(2000).link_count(), 2u);
  for (const Link& l : active.slice(2000).links()) EXPECT_EQ(l.kind, kActiveOnly);
  EXPECT_EQ(project_subnetwork(active, Projection::ActiveOnly), active);
  const TemporalNetwork passive = project_subnetwork(net, Projection::PassiveOnly);
  EXPECT_EQ(passive.slice(2000).link_count(), 2u);
  EXPECT_EQ(project_subnetwork(passive, Projection::ActiveOnly).slice(2000).link_count(), 0u);
}

TEST(Window, UnionClippedToRange) {
  const TemporalNetwork net = make_network({{2000, "a", "s", kActiveOnly},
                                            {2001, "a", "s", kPassiveOnly},
                                            {2002, "b", "t"},
                                            {2004, "c", "t"}});
  const Slice w = aggregate_window(net, 2000, 5);  // covers 2000..2002 after clipping
  EXPECT_EQ(w.year(), 2000);
  EXPECT_EQ(w.link_count(), 2u);
  const auto& reg = net.registry();
  EXPECT_EQ(w.find(*reg.find(Guild::A, "a"), *reg.find(Guild::B, "s")), kBothKinds);
  EXPECT_EQ(aggregate_window(net, 2004, 1).link_count(), 1u);
  EXPECT_THROW(aggregate_window(net, 2000, 4), std::invalid_argument);
}

TEST(PresentActors, AscendingByGuild) {
  const TemporalNetwork net = make_network({{2000, "z", "s"}, {2000, "a", "s"}});
  const auto as = net.present_actors(2000, Guild::A);
  ASSERT_EQ(as.size(), 2u);
  EXPECT_LT(as[0], as[1]);
  EXPECT_EQ(net.present_actors(2000, Guild::B).size(), 1u);
}

}  // namespace
}  // namespace tbnet
