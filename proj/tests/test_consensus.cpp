#include "fixtures.hpp"

#include "tbnet/consensus.hpp"
#include "tbnet/synth.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace tbnet {
namespace {

double mutual_information(const std::vector<int>& x, const std::vector<int>& y) {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> px, py;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    joint[{x[i], y[i]}] += 1;
    px[x[i]] += 1;
    py[y[i]] += 1;
  }
  double mi = 0.0;
  for (const auto& [k, c] : joint) mi += c / n * std::log(n * c / (px[k.first] * py[k.second]));
  return mi;
}

double entropy(const std::vector<int>& x) {
  std::map<int, double> c;
  for (int v : x) c[v] += 1;
  double h = 0.0;
  for (const auto& [v, k] : c) h -= k / x.size() * std::log(k / x.size());
  return h;
}

// AMI with the expected MI estimated by shuffling one labeling.
double ami_monte_carlo(const std::vector<int>& x, std::vector<int> y, int shuffles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double mi = mutual_information(x, y);
  double emi = 0.0;
  for (int s = 0; s < shuffles; ++s) {
    std::shuffle(y.begin(), y.end(), rng);
    emi += mutual_information(x, y);
  }
  emi /= shuffles;
  return (mi - emi) / (std::max(entropy(x), entropy(y)) - emi);
}

std::vector<int> random_labels(std::size_t n, int k, std::mt19937_64& rng) {
  std::vector<int> out(n);
  for (auto& v : out) v = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
  return out;
}

TEST(Ami, IdenticalAndRelabeledPartitionsScoreExactlyOne) {
  std::mt19937_64 rng(1);
  const auto x = random_labels(50, 5, rng);
  EXPECT_EQ(ami(x, x), 1.0);
  std::vector<int> relabeled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) relabeled[i] = 100 - 7 * x[i];
  EXPECT_EQ(ami(x, relabeled), 1.0);
}

TEST(Ami, LabelPermutationInvarianceIsExact) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto x = random_labels(60, 4, rng);
    const auto y = random_labels(60, 6, rng);
    std::vector<int> perm{5, 3, 0, 1, 4, 2};
    std::vector<int> y2(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) y2[i] = perm[static_cast<std::size_t>(y[i])];
    EXPECT_EQ(ami(x, y), ami(x, y2));
    EXPECT_NEAR(ami(x, y), ami(y, x), 1e-12);
  }
}

TEST(Ami, MatchesMonteCarloExpectation) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3; ++t) {
    const auto x = random_labels(14, 3, rng);
    auto y = x;
    for (int flip = 0; flip < 4; ++flip) y[rng() % y.size()] = static_cast<int>(rng() % 4);
    EXPECT_NEAR(ami(x, y), ami_monte_carlo(x, y, 200000, 10 + t), 5e-3);
  }
}

TEST(Ami, IndependentRandomPartitionsAverageNearZero) {
  std::mt19937_64 rng(4);
  double sum = 0.0;
  for (int t = 0; t < 100; ++t) sum += ami(random_labels(1000, 10, rng), random_labels(1000, 10, rng));
  EXPECT_LT(std::abs(sum / 100), 0.05);
}

TEST(Ami, TrivialPartitionsAndMismatch) {
  const std::vector<int> one(10, 0), other(10, 3), split{0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
  EXPECT_EQ(ami(one, other), 1.0);
  EXPECT_EQ(ami(one, split), 0.0);
  const std::vector<int> shorter(9, 0);
  EXPECT_THROW(ami(one, shorter), std::invalid_argument);
  const Partition p({{0, 2000}, {1, 2000}}, {0, 1}), q({{0, 2000}, {2, 2000}}, {0, 1});
  EXPECT_THROW(ami(p, q), std::invalid_argument);
}

Partition labels_to_partition(const std::vector<int>& labels) {
  std::vector<NodeKey> keys;
  for (std::size_t i = 0; i < labels.size(); ++i) keys.push_back({static_cast<ActorIndex>(i), 2000});
  return Partition(keys, labels);
}

TEST(Association, HandCountedFrequencies) {
  const std::vector<Partition> ps{labels_to_partition({0, 0, 1, 1}), labels_to_partition({0, 0, 0, 1}),
                                  labels_to_partition({0, 1, 1, 1})};
  const AssociationMatrix a = association_matrix(ps);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(a.ensemble_size, 3u);
  EXPECT_DOUBLE_EQ(a.at(0, 1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(a.at(1, 2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(a.at(2, 3), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(a.at(0, 2), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(a.at(0, 3), 0.0);
  EXPECT_DOUBLE_EQ(a.at(3, 3), 1.0);
  EXPECT_DOUBLE_EQ(a.at(1, 0), a.at(0, 1));

  const AssociationMatrix t = association_matrix(ps, 0.5);
  EXPECT_EQ(t.stored_entries(), 6u);  // three pairs, both triangles
  EXPECT_DOUBLE_EQ(t.at(0, 2), 0.0);
  const AssociationMatrix b = association_matrix(ps, 0.5, true);
  EXPECT_DOUBLE_EQ(b.at(0, 1), 1.0);

  EXPECT_THROW(association_matrix(std::vector<Partition>{ps[0]}), std::invalid_argument);
  const std::vector<Partition> mismatch{ps[0], labels_to_partition({0, 1, 2})};
  EXPECT_THROW(association_matrix(mismatch), std::invalid_argument);
}

TEST(NullThreshold, ExtremesAndRange) {
  EXPECT_EQ(null_threshold(12, 12, 20, 1), 0.0);  // singletons never co-occur
  EXPECT_EQ(null_threshold(12, 1, 20, 1), 1.0);
  const double t = null_threshold(60, 4, 50, 7);
  EXPECT_GT(t, 0.25);  // the max over pairs exceeds the per-pair mean
  EXPECT_LT(t, 1.0);
  EXPECT_EQ(t, null_threshold(60, 4, 50, 7));
}

TEST(MostCentral, TiesGoToLowestIndex) {
  const std::vector<std::vector<double>> m{{1, 0.5, 0.5}, {0.5, 1, 0.5}, {0.5, 0.5, 1}};
  std::vector<double> mean;
  EXPECT_EQ(most_central(m, mean), 0u);
  EXPECT_EQ(mean, (std::vector<double>{0.5, 0.5, 0.5}));
  const std::vector<std::vector<double>> m2{{1, 0.2, 0.3}, {0.2, 1, 0.9}, {0.3, 0.9, 1}};
  EXPECT_EQ(most_central(m2, mean), 2u);
}

TEST(Representative, DeterministicAcrossThreadCounts) {
  PlantedConfig cfg;
  cfg.n_modules = 2;
  cfg.slices = 3;
  cfg.mixing = 0.1;
  cfg.seed = 12;
  const PlantedResult planted = generate_planted(cfg);
  ConsensusOptions opts;
  opts.ensemble_size = 30;  // small ensembles push the 2-module null max to 1
  const ConsensusResult one = representative_partition(planted.network, {}, opts, 5);
  opts.threads = 4;
  const ConsensusResult four = representative_partition(planted.network, {}, opts, 5);
  EXPECT_EQ(one.partition, four.partition);
  EXPECT_EQ(one.diagnostics.mean_ami, four.diagnostics.mean_ami);
  const auto& d = one.diagnostics;
  EXPECT_EQ(d.ensemble_size, 30u);
  EXPECT_LT(d.representative, 30u);
  EXPECT_GE(d.threshold, 0.0);
  EXPECT_LE(d.threshold, 1.0);
  EXPECT_EQ(d.ami.size(), 30u);
  EXPECT_GT(ami(one.partition, planted.truth), 0.9);
}

TEST(CollapseToActors, MostFrequentModuleWithLowestIdOnTies) {
  const Partition p({{0, 2000}, {0, 2001}, {0, 2002}, {1, 2000}, {1, 2001}, {2, 2000}},
                    {5, 7, 7, 5, 7, 7});
  // dense ids: 5 -> 0, 7 -> 1 (first seen in (year, actor) order)
  const auto c = collapse_to_actors(p);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (std::pair<ActorIndex, int>{0, 1}));
  EXPECT_EQ(c[1], (std::pair<ActorIndex, int>{1, 0}));
  EXPECT_EQ(c[2], (std::pair<ActorIndex, int>{2, 1}));
}

}  // namespace
}  // namespace tbnet
