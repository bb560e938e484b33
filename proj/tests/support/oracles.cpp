#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tbnet::testing {

using boost::multiprecision::cpp_rational;

double nodf_oracle(const BinaryMatrix& m) {
  cpp_rational sum = 0;
  std::size_t pairs = 0;
  auto axis = [&](std::size_t n, auto cell, std::size_t len) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ++pairs;
        std::size_t mi = 0, mj = 0, both = 0;
        for (std::size_t k = 0; k < len; ++k) {
          mi += cell(i, k);
          mj += cell(j, k);
          both += cell(i, k) && cell(j, k);
        }
        if (mi == mj) continue;
        const std::size_t low = std::min(mi, mj);
        if (low == 0) continue;
        sum += cpp_rational(100 * both, low);
      }
    }
  };
  axis(m.rows(), [&](std::size_t i, std::size_t k) { return m(i, k) ? 1u : 0u; }, m.cols());
  axis(m.cols(), [&](std::size_t j, std::size_t k) { return m(k, j) ? 1u : 0u; }, m.rows());
  return cpp_rational(sum / pairs).convert_to<double>();
}

double t_tail_by_quadrature(double t, double df) {
  const double c = std::exp(std::lgamma((df + 1) / 2) - std::lgamma(df / 2)) / std::sqrt(df * std::numbers::pi);
  auto pdf = [&](double x) { return c * std::pow(1 + x * x / df, -(df + 1) / 2); };
  const int n = 200000;
  const double h = std::abs(t) / n;
  double s = pdf(0) + pdf(std::abs(t));
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * pdf(i * h);
  return 1.0 - 2.0 * s * h / 3.0;
}

}  // namespace tbnet::testing
