#pragma once

#include <cstddef>
#include <vector>

#include "ordanova/contingency_table.hpp"

namespace ordanova {

// Decomposition of the total ordinal variation of a table into a within-lab
// and a between-lab part.  All pieces live on the normalized scale where a
// maximally dispersed single distribution has variation 1:
//
//   h2_total   = (4/(K-1)) sum_k Fbar_k (1 - Fbar_k)          (pooled)
//   h2_within  = mean over labs of the per-lab variation
//   s2_between = (4/(K-1)) sum_k (1/M) sum_m (Fhat_km - Fbar_k)^2
//
// with Fhat the per-lab and Fbar the pooled cumulative frequencies.  For
// equal per-lab n the identity  h2_total = h2_within + s2_between  holds
// algebraically; decompose() verifies it (and an independent moment-form
// evaluation of both parts) on every call.
struct VariationDecomposition {
  double h2_total = 0.0;
  double h2_within = 0.0;
  double s2_between = 0.0;
  std::vector<double> h2_within_by_lab;   // length M
  std::vector<double> s2_between_by_k;    // length K-1, unnormalized (1/M)*sum of squares
};

VariationDecomposition decompose(const ContingencyTable& table);

// The three measures individually; each matches the corresponding field of
// decompose() exactly.
double total_variation(const ContingencyTable& table);
double within_lab_variation(const ContingencyTable& table, std::size_t lab);
double between_variation_at(const ContingencyTable& table, std::size_t k);

}  // namespace ordanova
