#pragma once

#include <cstdint>
#include <vector>

#include "ordanova/contingency_table.hpp"

namespace ordanova {

// Normal approximation N(mu, sigma2) of the null distribution of I_N for a
// study with M labs of n measurements under null category probabilities p:
//
//   mu     = (4/(K-1))   [ sum_{k<K} (K-k) p_k  -  sum_{k<K} F_k^2 ]
//   sigma2 = 16/(nM(K-1)^2) [ sum_k (K-k)^2 p_k(1-p_k)
//                             - sum_{k!=l} (K-k)(K-l) p_k p_l ]
//
// (1-based k, l over the first K-1 categories).  mu is also the exact mean
// of I_N under the plug-in rule: feeding a table's pooled frequencies back
// in gives mu == statistic_in(table).
struct NormalApprox {
  double mu = 0.0;
  double sigma2 = 0.0;
  std::size_t categories = 0;
  std::size_t labs = 0;
  std::int64_t replicates = 0;
};

NormalApprox normal_params(const ProbabilityVector& null_p, std::int64_t replicates,
                           std::size_t labs);

// Gaussian approximation of the multinomial count vector over the first K-1
// categories: mean_i = n p_i, cov_ii = n p_i (1 - p_i), cov_ij = -n p_i p_j.
struct GaussianCountModel {
  std::vector<double> mean;  // length K-1
  std::vector<double> cov;   // row-major (K-1) x (K-1)
};

GaussianCountModel gaussian_count_model(const ProbabilityVector& p, std::int64_t n);

// Standard normal quantile, absolute error below 1e-9 over (0, 1).
// Rational minimax approximation refined by one Newton step on the
// erfc-based CDF.
double std_normal_quantile(double q);

// Standard normal CDF via std::erfc.
double std_normal_cdf(double x);

// Chi-square CDF with df > 0 degrees of freedom (regularized lower
// incomplete gamma, series + continued fraction).
double chi2_cdf(double x, double df);

// Chi-square quantile, absolute error below 1e-8.  df >= 1, 0 < q < 1.
double chi2_quantile(double df, double q);

// Upper-alpha critical value mu + z_{1-alpha} sqrt(sigma2).  Throws
// InputError when sigma2 = 0 (degenerate null: all probability mass in one
// category).
double critical_value(const NormalApprox& approx, double alpha);

}  // namespace ordanova
