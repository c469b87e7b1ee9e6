#include "ordanova/variation.hpp"

#include <cmath>
#include <string>

#include "ordanova/errors.hpp"

namespace ordanova {

namespace {

// The two halves of the decomposition are each computed twice: once by
// aggregating the defining per-lab/per-category terms and once through the
// moment expansion
//
//   s2_between = (4/(K-1)) [ (1/M) sum_mk Fhat^2 - sum_k Fbar^2 ]
//   h2_within  = (4/(K-1)) [ sum_k Fbar - (1/M) sum_mk Fhat^2 ]
//
// Both routes are algebraically exact, so a mismatch beyond rounding noise
// means a programming error, not bad data.
constexpr double kRouteTolerance = 1e-12;

void check_route(double a, double b, const char* what) {
  if (!(std::abs(a - b) <= kRouteTolerance))
    throw InternalError(std::string("variation decomposition self-check failed for ") + what +
                        ": " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

VariationDecomposition decompose(const ContingencyTable& table) {
  const std::size_t M = table.labs();
  const std::size_t K = table.categories();
  const double n = static_cast<double>(table.replicates());
  const double scale = 4.0 / static_cast<double>(K - 1);

  // Per-lab cumulative fractions over the first K-1 boundaries (the K-th is
  // always 1 and contributes nothing to any F(1-F) or variance term).
  std::vector<double> fhat(M * (K - 1));
  for (std::size_t m = 0; m < M; ++m) {
    std::int64_t cum = 0;
    for (std::size_t k = 0; k + 1 < K; ++k) {
      cum += table.count(m, k);
      fhat[m * (K - 1) + k] = static_cast<double>(cum) / n;
    }
  }

  VariationDecomposition d;
  d.h2_within_by_lab.resize(M);
  double fhat_sq_sum = 0.0;  // sum over labs and boundaries of Fhat^2
  for (std::size_t m = 0; m < M; ++m) {
    double lab_sum = 0.0;
    for (std::size_t k = 0; k + 1 < K; ++k) {
      const double f = fhat[m * (K - 1) + k];
      lab_sum += f * (1.0 - f);
      fhat_sq_sum += f * f;
    }
    d.h2_within_by_lab[m] = scale * lab_sum;
    d.h2_within += d.h2_within_by_lab[m];
  }
  d.h2_within /= static_cast<double>(M);

  // Pooled cumulative fractions from exact column totals.
  const auto totals = table.column_totals();
  const double grand = n * static_cast<double>(M);
  std::vector<double> fbar(K - 1);
  std::int64_t cum = 0;
  for (std::size_t k = 0; k + 1 < K; ++k) {
    cum += totals[k];
    fbar[k] = static_cast<double>(cum) / grand;
  }

  double fbar_sum = 0.0, fbar_sq_sum = 0.0;
  for (std::size_t k = 0; k + 1 < K; ++k) {
    d.h2_total += fbar[k] * (1.0 - fbar[k]);
    fbar_sum += fbar[k];
    fbar_sq_sum += fbar[k] * fbar[k];
  }
  d.h2_total *= scale;

  d.s2_between_by_k.resize(K - 1);
  for (std::size_t k = 0; k + 1 < K; ++k) {
    double dev_sq = 0.0;
    for (std::size_t m = 0; m < M; ++m) {
      const double dev = fhat[m * (K - 1) + k] - fbar[k];
      dev_sq += dev * dev;
    }
    d.s2_between_by_k[k] = dev_sq / static_cast<double>(M);
    d.s2_between += d.s2_between_by_k[k];
  }
  d.s2_between *= scale;

  const double mean_fhat_sq = fhat_sq_sum / static_cast<double>(M);
  check_route(d.s2_between, scale * (mean_fhat_sq - fbar_sq_sum), "s2_between");
  check_route(d.h2_within, scale * (fbar_sum - mean_fhat_sq), "h2_within");
  check_route(d.h2_total, d.h2_within + d.s2_between, "h2_total");
  return d;
}

double total_variation(const ContingencyTable& table) { return decompose(table).h2_total; }

double within_lab_variation(const ContingencyTable& table, std::size_t lab) {
  if (lab >= table.labs())
    throw InputError("lab index " + std::to_string(lab) + " out of range (M=" +
                     std::to_string(table.labs()) + ")");
  return decompose(table).h2_within_by_lab[lab];
}

double between_variation_at(const ContingencyTable& table, std::size_t k) {
  if (k + 1 >= table.categories())
    throw InputError("category boundary index " + std::to_string(k) +
                     " out of range (valid: 0.." + std::to_string(table.categories() - 2) + ")");
  return decompose(table).s2_between_by_k[k];
}

}  // namespace ordanova
