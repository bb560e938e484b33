// Statistical kernels shared by the analyses: correlation, Student-t p-values
// and least-squares fits on transformed axes.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tbnet::stats {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  double r2 = 0.0;
  std::size_t n = 0;
};

struct Correlation {
  double rho = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

/// Pearson correlation. Requires equal lengths >= 3 and nonzero variance in
/// both series; throws std::invalid_argument otherwise.
double pearson(std::span<const double> x, std::span<const double> y);

/// Two-sided p-value of t = rho * sqrt((n-2)/(1-rho^2)) under Student-t with
/// n-2 degrees of freedom. |rho| == 1 yields 0.
double t_test_p(double rho, std::size_t n);

/// pearson() followed by t_test_p().
Correlation correlate(std::span<const double> x, std::span<const double> y);

/// Two-sided tail probability P(|T| >= |t|) for Student-t with `df` degrees of freedom.
double student_t_two_sided(double t, double df);

/// Regularized incomplete beta I_x(a, b) by continued fraction (rel. tol 1e-10).
double incomplete_beta(double a, double b, double x);

/// Ordinary least squares y = intercept + slope * x. Optional weights apply
/// per point. Requires at least two distinct x values.
FitResult linear_fit(std::span<const double> x, std::span<const double> y,
                     std::span<const double> weights = {});

/// Least squares on (ln k, ln v). Points need k > 0 and v > 0.
FitResult loglog_fit(std::span<const std::pair<double, double>> points,
                     std::span<const double> weights = {});

/// Decay rate of an exponential survival curve: least squares of ln P against
/// duration, returning -slope. Probabilities must lie in (0, 1].
double exp_survival_fit(std::span<const std::pair<double, double>> ccdf);

/// Population mean and standard deviation.
double mean(std::span<const double> x);
double population_std(std::span<const double> x);

}  // namespace tbnet::stats
