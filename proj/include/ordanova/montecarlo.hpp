#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ordanova/approx.hpp"
#include "ordanova/contingency_table.hpp"
#include "ordanova/kernels.hpp"
#include "ordanova/rng.hpp"
#include "ordanova/statistics.hpp"

namespace ordanova {

enum class McStatistic {
  ip,         // ratio statistic, full empirical evaluation per replication
  in,         // pooled statistic I_N under the fixed null (see simulate_distribution)
  s2_between, // between-lab component, for the bootstrap lab-effect p-value
};

struct SimConfig {
  ProbabilityVector null_p;       // null category probabilities
  std::size_t labs = 0;           // M >= 2
  std::int64_t reps_per_lab = 0;  // n >= 1
  std::size_t draws = 10000;      // Monte Carlo sample size, >= 1
  std::uint64_t seed = 1;
  McStatistic statistic = McStatistic::in;
  DofConvention dof = DofConvention::anova;  // used by McStatistic::ip only
};

struct EngineOptions {
  unsigned workers = 1;                              // worker threads
  kernels::Choice kernel = kernels::Choice::automatic;
};

// Sorted Monte Carlo sample of a statistic under a multinomial null.
struct McDistribution {
  std::vector<double> values;  // ascending; length == config.draws
  SimConfig config;
};

// One multinomial draw: n observations assigned to categories by inverse CDF
// (one uniform per observation, category = smallest k with u < F_k).
// Returns K counts summing to n.
std::vector<std::int64_t> sample_multinomial(Xoshiro256StarStar& stream,
                                             std::int64_t n,
                                             const ProbabilityVector& p);

// Simulates the null distribution of the configured statistic: every draw
// samples M independent multinomial count vectors (lab-major, one uniform
// per observation) and evaluates the statistic.
//
// Statistic semantics per draw:
//   * ip:  full empirical ratio on the drawn table.  Tables with zero total
//     variation (possible for tiny nM under skewed p) yield +infinity, which
//     lands in the upper tail rather than being dropped.
//   * s2_between: empirical between-lab component of the drawn table.
//   * in:  the pooled weighted-count form with the null cumulative F held
//     fixed, (4/((K-1)nM)) sum (K-k) X_km - (4/(K-1)) sum F_k^2.  This is
//     the quantity whose distribution the normal approximation N(mu, sigma2)
//     describes; the F^2 term is a constant of the null, not re-estimated
//     per draw.
//
// Every draw depends only on (seed, draw index), so results are bit-identical
// across runs and across any worker count.
McDistribution simulate_distribution(const SimConfig& config,
                                     const EngineOptions& options = {});

// The ceil(alpha*draws)-th largest value (order statistic, no interpolation).
double upper_percentile(const McDistribution& dist, double alpha);

// Fraction of draws >= threshold.
double tail_fraction(const McDistribution& dist, double threshold);

struct EcdfRow {
  double value;
  double cumulative;  // fraction of draws <= value
};

// One row per distinct value; final cumulative is 1.
std::vector<EcdfRow> ecdf_rows(const McDistribution& dist);

// CSV with header `value,cumulative_fraction`, full round-trip precision.
void write_ecdf_csv(std::ostream& out, const McDistribution& dist);

// Kolmogorov-Smirnov distance between the draws and N(mu, sigma2).
double ks_distance_normal(const McDistribution& dist, const NormalApprox& approx);

// KS distance between the draws and the distribution of X/(M-1) with
// X ~ chi-square(M-1), the classical reference for the ratio statistic.
double ks_distance_scaled_chi2(const McDistribution& dist, std::size_t labs);

}  // namespace ordanova
