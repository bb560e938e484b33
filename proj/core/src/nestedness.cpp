#include "tbnet/nestedness.hpp"

#include "tbnet/parallel.hpp"
#include "tbnet/stats.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tbnet {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t overlap(const Bits& x, const Bits& y) {
  std::size_t n = 0;
  for (std::size_t w = 0; w < x.size(); ++w) n += static_cast<std::size_t>(std::popcount(x[w] & y[w]));
  return n;
}

// Accumulates sum of |N_i & N_j| per smaller-marginal value over one axis.
void paired_overlaps(const std::vector<Bits>& sets, const std::vector<std::size_t>& marginals,
                     std::vector<std::uint64_t>& overlap_by_fill) {
  const std::size_t n = sets.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t mi = marginals[i], mj = marginals[j];
      if (mi == mj || mi == 0 || mj == 0) continue;
      overlap_by_fill[std::min(mi, mj)] += overlap(sets[i], sets[j]);
    }
  }
}

}  // namespace

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string_view>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != '0' && rows[r][c] != '1') throw std::invalid_argument("matrix cells must be 0 or 1");
      m.set(r, c, rows[r][c] == '1');
    }
  }
  return m;
}

std::size_t BinaryMatrix::row_sum(std::size_t r) const {
  std::size_t s = 0;
  for (std::size_t c = 0; c < cols_; ++c) s += cells_[r * cols_ + c];
  return s;
}

std::size_t BinaryMatrix::col_sum(std::size_t c) const {
  std::size_t s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += cells_[r * cols_ + c];
  return s;
}

std::size_t BinaryMatrix::count() const {
  std::size_t s = 0;
  for (auto v : cells_) s += v;
  return s;
}

double BinaryMatrix::fill() const {
  return cells_.empty() ? 0.0 : static_cast<double>(count()) / static_cast<double>(cells_.size());
}

double nodf(const BinaryMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R < 2 && C < 2) throw std::invalid_argument("nodf: need at least two rows or two columns");
  const std::size_t row_words = (C + 63) / 64, col_words = (R + 63) / 64;
  std::vector<Bits> row_bits(R, Bits(row_words, 0)), col_bits(C, Bits(col_words, 0));
  std::vector<std::size_t> row_m(R, 0), col_m(C, 0);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      if (!m(r, c)) continue;
      row_bits[r][c / 64] |= std::uint64_t{1} << (c % 64);
      col_bits[c][r / 64] |= std::uint64_t{1} << (r % 64);
      ++row_m[r];
      ++col_m[c];
    }
  }
  std::vector<std::uint64_t> by_fill(std::max(R, C) + 1, 0);
  paired_overlaps(row_bits, row_m, by_fill);
  paired_overlaps(col_bits, col_m, by_fill);

  // Sum of overlap/fill over pairs, kept exact so the result is the correctly
  // rounded value of the definition.
  using boost::multiprecision::cpp_rational;
  cpp_rational total = 0;
  for (std::size_t d = 1; d < by_fill.size(); ++d) {
    if (by_fill[d]) total += cpp_rational(by_fill[d], d);
  }
  const auto pairs = static_cast<std::uint64_t>(R * (R - 1) / 2 + C * (C - 1) / 2);
  total *= 100;
  total /= pairs;
  return total.convert_to<double>();
}

BinaryMatrix null_occupation_sample(const BinaryMatrix& m, std::uint64_t seed) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<double> row_fill(R), col_fill(C);
  for (std::size_t r = 0; r < R; ++r) row_fill[r] = static_cast<double>(m.row_sum(r)) / static_cast<double>(C);
  for (std::size_t c = 0; c < C; ++c) col_fill[c] = static_cast<double>(m.col_sum(c)) / static_cast<double>(R);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  BinaryMatrix out(R, C);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) {
      const double p = 0.5 * (row_fill[r] + col_fill[c]);
      out.set(r, c, u(rng) < p);
    }
  }
  return out;
}

BinaryMatrix incidence_matrix(const TemporalNetwork& net, const Slice& slice) {
  const auto& reg = net.registry();
  std::vector<std::size_t> row_of(reg.size(), 0), col_of(reg.size(), 0);
  std::size_t R = 0, C = 0;
  for (ActorIndex i = 0; i < reg.size(); ++i) {
    if (!slice.present(i)) continue;
    if (reg[i].guild == Guild::A) {
      row_of[i] = R++;
    } else {
      col_of[i] = C++;
    }
  }
  BinaryMatrix m(R, C);
  for (const Link& l : slice.links()) m.set(row_of[l.a], col_of[l.b]);
  return m;
}

std::vector<NestednessReport> nestedness_series(const TemporalNetwork& net, const NestednessOptions& opts) {
  if (opts.n_null < 2) throw std::invalid_argument("nestedness_series: n_null must be at least 2");
  std::vector<NestednessReport> out(net.slice_count());
  parallel_for(net.slice_count(), opts.threads, [&](std::size_t idx) {
    const int year = net.slices()[idx].year();
    NestednessReport& rep = out[idx];
    rep.year = year;
    const Slice window = aggregate_window(net, year, opts.window_width);
    const BinaryMatrix m = incidence_matrix(net, window);
    rep.rows = m.rows();
    rep.cols = m.cols();
    if ((m.rows() < 2 && m.cols() < 2) || m.count() == 0) return;
    rep.nodf = nodf(m);
    std::vector<double> null_values(opts.n_null);
    const std::uint64_t year_seed = derive_seed(opts.seed, static_cast<std::uint64_t>(year));
    for (std::size_t i = 0; i < opts.n_null; ++i) {
      null_values[i] = nodf(null_occupation_sample(m, derive_seed(year_seed, i)));
    }
    const double mu = stats::mean(null_values);
    double ss = 0.0;
    for (double v : null_values) ss += (v - mu) * (v - mu);
    const double sd = std::sqrt(ss / static_cast<double>(opts.n_null - 1));
    rep.n_null = opts.n_null;
    rep.null_mean = mu;
    rep.null_std = sd;
    if (sd > 0.0) rep.z_score = (*rep.nodf - mu) / sd;
  });
  return out;
}

}  // namespace tbnet
