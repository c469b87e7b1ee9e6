#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "ordanova/contingency_table.hpp"

// Embedded datasets and published reference values.
//
// The worked examples and simulation tables come from the original
// publication of the ORDANOVA interlaboratory method (a collaborative study
// of pathological findings scored on a five-level ordinal scale).  The
// embedded CSVs are byte-identical to the files shipped in data/, so
// `example` and `analyze` exercise one parsing path.

namespace ordanova::datasets {

// Worked example 1: five labs, five ordered categories, five measurements
// each ("table3" in the publication's numbering).
const char* illustrative_csv();
// Worked example 2: same study with systematically shifted labs ("table4").
const char* rearranged_csv();

ContingencyTable illustrative_table();
ContingencyTable rearranged_table();

// I_N values the publication prints for the two examples.  Neither is
// reproducible from the publication's own definitions (the second even
// exceeds the statistic's attainable maximum of 1); reports show them next
// to the computed values with a discrepancy note.
inline constexpr double kIllustrativePublishedIn = 0.544;
inline constexpr double kRearrangedPublishedIn = 1.88;

// Null probability settings of the published simulation study (K = 3).
const ProbabilityVector& case_a();  // uniform 1/3 each
const ProbabilityVector& case_b();  // skewed (3/6, 1/6, 2/6)

// Published simulation grid for the ratio statistic I_P ("table1" = case a,
// "table2" = case b): upper fifth percentile and the percentage of draws at
// or above 3, per (labs, measurements) cell.
struct IpReferenceRow {
  std::size_t labs;
  std::int64_t reps_per_lab;
  double upper5;         // published simulated upper-5% percentile
  double tail_percent;   // published percentage of draws >= 3
};
const std::vector<IpReferenceRow>& ip_reference_case_a();
const std::vector<IpReferenceRow>& ip_reference_case_b();

// Published grid for I_N ("table5" = case a, "table6" = case b): simulated
// and approximate upper fifth percentiles.  Rows with reps_per_lab = 20
// contradict the fact that the I_N null distribution depends on (n, M) only
// through the product nM (their printed values differ between (5,20) and
// (20,5)); those rows carry known_discrepancy = true and reports show the
// recomputed value alongside.
struct InReferenceRow {
  std::size_t labs;
  std::int64_t reps_per_lab;
  double simulated_upper5;  // published I^s
  double approx_upper5;     // published I^a
  bool known_discrepancy;
};
const std::vector<InReferenceRow>& in_reference_case_a();
const std::vector<InReferenceRow>& in_reference_case_b();

}  // namespace ordanova::datasets
