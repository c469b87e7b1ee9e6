#pragma once

#include <cstdint>

#include "ordanova/contingency_table.hpp"

namespace ordanova {

// Degrees-of-freedom convention for the ratio statistic I_P.
//
// The original publication of the index states df_between = M(n-1), but the
// chi-square reference distribution it cites (chi2/(M-1)) and the magnitudes
// of its own simulated percentiles are only consistent with the standard
// ANOVA choice df_between = M-1.  We default to the ANOVA convention and
// keep the published one selectable for audit; the two differ by the exact
// factor (M-1)/(M(n-1)).
enum class DofConvention {
  anova,      // df_between = M-1,     df_total = nM-1  (default)
  published,  // df_between = M(n-1),  df_total = nM-1
};

struct DegreesOfFreedom {
  double between = 0.0;
  double total = 0.0;
};

DegreesOfFreedom degrees_of_freedom(std::size_t labs, std::int64_t replicates,
                                    DofConvention convention);

// Ratio statistic I_P = (s2_between/df_between) / (h2_total/df_total).
// Throws InputError when the table has no ordinal variation at all
// (h2_total = 0), where the ratio is undefined.
double statistic_ip(const ContingencyTable& table,
                    DofConvention convention = DofConvention::anova);

// Statistic I_N = h2_within + s2_between.  By the decomposition identity
// this equals h2_total, so it depends on the table only through the pooled
// category totals.  Internally cross-checked against both the pooled closed
// form and the weighted-count form
//   (4/((K-1)nM)) sum_m sum_k (K-k) X_km - (4/(K-1)) sum_k Fbar_k^2
// (1-based k; the weight of the last category is zero).
double statistic_in(const ContingencyTable& table);

}  // namespace ordanova
