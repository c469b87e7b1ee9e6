#include "ordanova/statistics.hpp"

#include <cmath>
#include <string>

#include "ordanova/errors.hpp"
#include "ordanova/variation.hpp"

namespace ordanova {

DegreesOfFreedom degrees_of_freedom(std::size_t labs, std::int64_t replicates,
                                    DofConvention convention) {
  DegreesOfFreedom dof;
  dof.total = static_cast<double>(replicates) * static_cast<double>(labs) - 1.0;
  switch (convention) {
    case DofConvention::anova:
      dof.between = static_cast<double>(labs) - 1.0;
      break;
    case DofConvention::published:
      dof.between = static_cast<double>(labs) * (static_cast<double>(replicates) - 1.0);
      break;
  }
  if (dof.between <= 0.0)
    throw InputError("between-lab degrees of freedom are zero for M=" + std::to_string(labs) +
                     ", n=" + std::to_string(replicates) + " under the chosen convention");
  return dof;
}

double statistic_ip(const ContingencyTable& table, DofConvention convention) {
  const VariationDecomposition d = decompose(table);
  if (d.h2_total == 0.0)
    throw InputError("no ordinal variation (h2_total = 0): all observations fall in one "
                     "category, so the ratio statistic is undefined");
  const DegreesOfFreedom dof =
      degrees_of_freedom(table.labs(), table.replicates(), convention);
  return (d.s2_between / dof.between) / (d.h2_total / dof.total);
}

double statistic_in(const ContingencyTable& table) {
  const VariationDecomposition d = decompose(table);
  const double in = d.h2_within + d.s2_between;

  // Cross-check against the weighted-count form: category k (1-based)
  // carries weight K-k, so the last category drops out and
  //   I_N = (4/((K-1)nM)) sum_k (K-k) C_k - (4/(K-1)) sum_{k<K} Fbar_k^2
  // with C_k the column totals.  The weighted sum is integer arithmetic,
  // making this an independent evaluation route.
  const std::size_t K = table.categories();
  const double scale = 4.0 / static_cast<double>(K - 1);
  const auto totals = table.column_totals();
  const double grand =
      static_cast<double>(table.replicates()) * static_cast<double>(table.labs());

  std::int64_t weighted = 0;
  for (std::size_t k = 0; k < K; ++k)
    weighted += static_cast<std::int64_t>(K - 1 - k) * totals[k];

  double fbar_sq_sum = 0.0;
  std::int64_t cum = 0;
  for (std::size_t k = 0; k + 1 < K; ++k) {
    cum += totals[k];
    const double f = static_cast<double>(cum) / grand;
    fbar_sq_sum += f * f;
  }
  const double weighted_form =
      scale * (static_cast<double>(weighted) / grand) - scale * fbar_sq_sum;

  if (!(std::abs(in - weighted_form) <= 1e-12))
    throw InternalError("I_N self-check failed: decomposition gives " + std::to_string(in) +
                        ", weighted-count form gives " + std::to_string(weighted_form));
  return in;
}

}  // namespace ordanova
