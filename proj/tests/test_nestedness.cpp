#include "fixtures.hpp"
#include "oracles.hpp"

#include "tbnet/nestedness.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace tbnet {
namespace {

using testing::nodf_oracle;

BinaryMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::size_t r = dim(rng), c = dim(rng);
  while (r < 2 && c < 2) c = dim(rng);
  const double fill = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  std::bernoulli_distribution cell(fill);
  BinaryMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, cell(rng));
  }
  return m;
}

TEST(Nodf, EqualsPairwiseOracleExactly) {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 200; ++t) {
    const BinaryMatrix m = random_matrix(rng);
    EXPECT_EQ(nodf(m), nodf_oracle(m)) << "trial " << t;
  }
}

TEST(Nodf, ReferenceMatrices) {
  EXPECT_EQ(nodf(BinaryMatrix::from_strings({"1111", "1110", "1100", "1000"})), 100.0);
  EXPECT_EQ(nodf(BinaryMatrix::from_strings({"10", "01"})), 0.0);
  // rows: marginals equal -> 0; columns 1-2 and 2-3 score 100, 1-3 scores 0
  EXPECT_EQ(nodf(BinaryMatrix::from_strings({"110", "011"})), 50.0);
  EXPECT_EQ(nodf(BinaryMatrix::from_strings({"111", "111"})), 0.0);
  EXPECT_THROW(nodf(BinaryMatrix::from_strings({"1"})), std::invalid_argument);
}

TEST(Nodf, InvariantUnderRowAndColumnPermutation) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const BinaryMatrix m = random_matrix(rng);
    std::vector<std::size_t> pr(m.rows()), pc(m.cols());
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    BinaryMatrix p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) p.set(i, j, m(pr[i], pc[j]));
    }
    EXPECT_EQ(nodf(p), nodf(m));
  }
}

TEST(OccupationNull, PreservesExpectedFill) {
  const BinaryMatrix m = BinaryMatrix::from_strings({"111100", "110000", "100000", "111111", "010010"});
  const int samples = 1000;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double f = null_occupation_sample(m, 1000 + s).fill();
    sum += f;
    sum_sq += f * f;
  }
  const double mean = sum / samples;
  const double sd = std::sqrt((sum_sq - samples * mean * mean) / (samples - 1));
  EXPECT_LT(std::abs(mean - m.fill()), 3.0 * sd / std::sqrt(samples));
}

TEST(OccupationNull, FullAndEmptyCrossingsAreFixedPoints) {
  // A full row crossing a full column forces p = 1 on their shared cell; an
  // empty row crossing an empty column forces p = 0.
  const BinaryMatrix full = BinaryMatrix::from_strings({"111", "110", "100"});
  const BinaryMatrix empty = BinaryMatrix::from_strings({"110", "100", "000"});
  for (std::uint64_t s = 0; s < 50; ++s) {
    EXPECT_TRUE(null_occupation_sample(full, s)(0, 0));
    EXPECT_FALSE(null_occupation_sample(empty, s)(2, 2));
  }
}

TEST(Incidence, PresentActorsInRegistryOrder) {
  const TemporalNetwork net = testing::make_network({{2000, "a", "s"}, {2000, "b", "t"}, {2001, "c", "s"}});
  const BinaryMatrix m = incidence_matrix(net, net.slice(2000));
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_TRUE(m(0, 0));
  EXPECT_TRUE(m(1, 1));
  EXPECT_FALSE(m(0, 1));
}

TEST(Series, WindowedReportsAndThreadIndependence) {
  std::vector<testing::LinkSpec> links;
  std::mt19937_64 rng(3);
  std::bernoulli_distribution cell(0.35);
  for (int y = 2000; y < 2008; ++y) {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 6; ++b) {
        if (cell(rng)) links.push_back({y, "a" + std::to_string(a), "b" + std::to_string(b)});
      }
    }
  }
  const TemporalNetwork net = testing::make_network(links);
  NestednessOptions opts;
  opts.n_null = 20;
  opts.seed = 9;
  const auto one = nestedness_series(net, opts);
  opts.threads = 4;
  const auto four = nestedness_series(net, opts);
  ASSERT_EQ(one.size(), 8u);
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].year, 2000 + static_cast<int>(i));
    ASSERT_TRUE(one[i].nodf);
    EXPECT_EQ(*one[i].nodf, nodf(incidence_matrix(net, aggregate_window(net, one[i].year, 5))));
    EXPECT_EQ(one[i].z_score, four[i].z_score);
    EXPECT_EQ(one[i].n_null, 20u);
  }
}

TEST(Series, DegenerateWindowHasNoValues) {
  const TemporalNetwork net = testing::make_network({{2000, "a", "s"}, {2010, "a", "s"}, {2010, "b", "t"}});
  NestednessOptions opts;
  opts.window_width = 1;
  opts.n_null = 5;
  const auto r = nestedness_series(net, opts);
  EXPECT_FALSE(r.front().nodf);  // single cell
  EXPECT_FALSE(r[1].nodf);       // empty year
  EXPECT_TRUE(r.back().nodf);
}

}  // namespace
}  // namespace tbnet
