#include "fixtures.hpp"

#include "tbnet/consensus.hpp"
#include "tbnet/ingest.hpp"
#include "tbnet/synth.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace tbnet {
namespace {

SynthConfig small_config(std::uint64_t seed) {
  SynthConfig cfg;
  cfg.years = 12;
  cfg.seed = seed;
  return cfg;
}

TEST(Generate, DeterministicForSeed) {
  const SynthResult a = generate(small_config(5));
  const SynthResult b = generate(small_config(5));
  EXPECT_EQ(a.network, b.network);
  EXPECT_EQ(a.planted_module, b.planted_module);
  ASSERT_EQ(a.events.size(), b.events.size());
  const SynthResult c = generate(small_config(6));
  EXPECT_FALSE(a.network == c.network);
}

TEST(Generate, ReplayRebuildsTheNetwork) {
  SynthConfig cfg = small_config(7);
  cfg.n_planted_modules = 3;
  cfg.mixing = 0.2;
  const SynthResult r = generate(cfg);
  EXPECT_EQ(replay(r.network.registry(), cfg.first_year, cfg.years, r.events), r.network);
  EXPECT_EQ(r.network.slice_count(), static_cast<std::size_t>(cfg.years));
  EXPECT_EQ(r.network.first_year(), cfg.first_year);
}

TEST(Generate, NoDepartureMeansNoRemovals) {
  SynthConfig cfg = small_config(8);
  cfg.departure_prob = 0.0;
  const SynthResult r = generate(cfg);
  for (const SynthEvent& e : r.events) EXPECT_NE(e.kind, SynthEventKind::Detach);
  for (std::size_t s = 1; s < r.network.slice_count(); ++s) {
    const Slice& prev = r.network.slices()[s - 1];
    const Slice& cur = r.network.slices()[s];
    for (const Link& l : prev.links()) EXPECT_TRUE(cur.find(l.a, l.b));
  }
}

TEST(Generate, ValidateNamesTheViolatedBound) {
  auto rejects = [](auto mutate, const char* fragment) {
    SynthConfig cfg;
    mutate(cfg);
    try {
      cfg.validate();
      ADD_FAILURE() << "accepted config, expected: " << fragment;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  rejects([](SynthConfig& c) { c.years = 1; }, "years");
  rejects([](SynthConfig& c) { c.departure_prob = 1.5; }, "departure_prob");
  rejects([](SynthConfig& c) { c.baseline_weight = 0.0; }, "baseline_weight");
  rejects([](SynthConfig& c) { c.mixing = -0.1; }, "mixing");
  rejects([](SynthConfig& c) { c.alpha_attach = std::nan(""); }, "alpha_attach");
  EXPECT_NO_THROW(SynthConfig{}.validate());
}

// Rewiring picks its target from last year's present HS with weight
// k + 1. Sum each event's bin probabilities into expected counts and compare
// the observed target degrees with a chi-square test.
TEST(Generate, IncumbentAttachmentFollowsKernel) {
  SynthConfig cfg;
  cfg.years = 25;
  cfg.initial_A = 300;
  cfg.initial_B = 150;
  cfg.arrival_rate_A = 30;
  cfg.arrival_rate_B = 10;
  cfg.rewire_rate = 0.3;
  cfg.seed = 99;
  const SynthResult r = generate(cfg);
  const auto& net = r.network;
  std::map<int, std::map<std::uint32_t, double>> bin_prob;  // year -> k -> P(target has degree k)
  std::map<int, double> pool_total;
  std::map<std::uint32_t, double> expected, observed;
  std::size_t n = 0;
  for (const SynthEvent& e : r.events) {
    if (e.kind != SynthEventKind::AttachIncumbent) continue;
    if (!bin_prob.count(e.year)) {
      const Slice& prev = net.slice(e.year - 1);
      auto& probs = bin_prob[e.year];
      double& total = pool_total[e.year];
      for (ActorIndex i = 0; i < net.registry().size(); ++i) {
        if (net.registry()[i].guild != Guild::B || !prev.present(i)) continue;
        const double w = prev.degree(i) + 1.0;
        probs[prev.degree(i)] += w;
        total += w;
      }
      for (auto& [k, p] : probs) p /= total;
    }
    EXPECT_NEAR(e.probability, (e.target_degree + 1.0) / pool_total[e.year], 1e-12);
    for (const auto& [k, p] : bin_prob[e.year]) expected[k] += p;
    observed[e.target_degree] += 1;
    ++n;
  }
  ASSERT_GT(n, 1000u);
  // Merge tail bins until each expects at least 5 events.
  double chi2 = 0.0, exp_acc = 0.0, obs_acc = 0.0;
  int df = -1;
  for (const auto& [k, e] : expected) {
    exp_acc += e;
    obs_acc += observed[k];
    if (exp_acc >= 5.0) {
      chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
      exp_acc = obs_acc = 0.0;
      ++df;
    }
  }
  if (exp_acc > 0.0) chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
  ASSERT_GT(df, 2);
  const boost::math::chi_squared dist(df);
  EXPECT_LT(chi2, boost::math::quantile(dist, 0.999)) << "df " << df;
}

TEST(Generate, EdgeListRoundTrip) {
  const SynthResult r = generate(small_config(10));
  testing::TempDir dir("synth");
  write_edge_list(r.network, dir.path() / "edges.csv");
  const TemporalNetwork back = parse_edge_list(dir.path() / "edges.csv");
  ASSERT_EQ(back.registry().size(), r.network.registry().size());
  for (ActorIndex i = 0; i < back.registry().size(); ++i) {
    EXPECT_EQ(back.registry()[i].id, r.network.registry()[i].id);
  }
  EXPECT_EQ(back.slices(), r.network.slices());
}

TEST(Generate, GroundTruthHasOneLinePerEvent) {
  const SynthResult r = generate(small_config(11));
  testing::TempDir dir("truth");
  write_ground_truth(r, dir.path() / "gt.jsonl");
  const std::string text = testing::read_file(dir.path() / "gt.jsonl");
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), r.events.size());
}

TEST(Planted, ModulesAndMixing) {
  PlantedConfig cfg;
  cfg.n_modules = 4;
  cfg.slices = 3;
  cfg.mixing = 0.0;
  const PlantedResult r = generate_planted(cfg);
  EXPECT_EQ(r.network.slice_count(), 3u);
  EXPECT_EQ(r.truth.n_modules(), 4);
  for (const Slice& s : r.network.slices()) {
    for (const Link& l : s.links()) EXPECT_EQ(r.truth.module_of(l.a, s.year()), r.truth.module_of(l.b, s.year()));
  }
  cfg.mixing = 2.0;
  EXPECT_THROW(generate_planted(cfg), std::invalid_argument);
}

TEST(Nested, NoiseFreeStaircaseIsPerfectlyNested) {
  // 55 ones fill the upper-left triangle of a 10x10: marginals 10..1.
  EXPECT_EQ(nodf(generate_nested(10, 10, 0.55, 0.0, 1)), 100.0);
  const BinaryMatrix full = generate_nested(6, 4, 1.0, 0.0, 1);
  EXPECT_EQ(full.count(), 24u);
  EXPECT_EQ(nodf(full), 0.0);
  EXPECT_LT(nodf(generate_nested(20, 20, 0.4, 1.0, 3)), nodf(generate_nested(20, 20, 0.4, 0.0, 3)));
  EXPECT_THROW(generate_nested(0, 3, 0.5, 0.0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace tbnet
