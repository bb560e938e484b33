// NODF nestedness (overlap and decreasing fill) and the occupation-probability
// null model.

#pragma once

#include "tbnet/netcore.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace tbnet {

/// Dense 0/1 incidence matrix; rows are GuildA actors, columns GuildB actors.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  /// Builds from strings of '0'/'1', one per row, e.g. {"110", "011"}.
  static BinaryMatrix from_strings(const std::vector<std::string_view>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v = true) { cells_[r * cols_ + c] = v ? 1 : 0; }

  std::size_t row_sum(std::size_t r) const;
  std::size_t col_sum(std::size_t c) const;
  std::size_t count() const;
  /// Occupied fraction of all cells; 0 for an empty matrix.
  double fill() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// NODF in [0, 100]. Throws std::invalid_argument when the matrix has fewer
/// than two rows and fewer than two columns.
double nodf(const BinaryMatrix& m);

/// Fills cell (i, j) with probability (row_fill(i) + col_fill(j)) / 2.
BinaryMatrix null_occupation_sample(const BinaryMatrix& m, std::uint64_t seed);

/// Incidence matrix of a slice over its present actors, in registry order.
BinaryMatrix incidence_matrix(const TemporalNetwork& net, const Slice& slice);

struct NestednessReport {
  int year = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<double> nodf;
  std::optional<double> null_mean;
  std::optional<double> null_std;  // sample standard deviation
  std::optional<double> z_score;
  std::size_t n_null = 0;
};

struct NestednessOptions {
  int window_width = 5;
  std::size_t n_null = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// One report per year, computed on the window centered at that year.
/// Degenerate windows yield a report without values.
std::vector<NestednessReport> nestedness_series(const TemporalNetwork& net, const NestednessOptions& opts);

}  // namespace tbnet
