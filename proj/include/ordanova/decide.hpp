#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordanova/contingency_table.hpp"
#include "ordanova/montecarlo.hpp"
#include "ordanova/statistics.hpp"

namespace ordanova {

enum class Decision {
  reject,      // evidence of a laboratory effect
  no_reject,
  doubt,       // between the two thresholds of the threefold rule
  degenerate,  // null distribution has zero variance; no test possible
};

const char* decision_name(Decision d);

struct TestOutcome {
  double statistic = 0.0;
  std::string method;
  std::vector<double> thresholds;  // one, or {1, 3} for the threefold rule
  std::optional<double> alpha;
  Decision decision = Decision::no_reject;
  std::string note;  // caveats; empty when there are none
};

// Upper-tail test of I_N against the normal approximation.  The null is
// `null_p` when given, otherwise the pooled plug-in frequencies of the
// table itself.  Beware the plug-in degeneracy: with the pooled null the
// observed statistic equals the null mean mu by construction, so the test
// can never reject; the outcome's note says so.  A null with all mass in
// one category yields Decision::degenerate.
TestOutcome test_in(const ContingencyTable& table, double alpha,
                    const std::optional<ProbabilityVector>& null_p = std::nullopt);

// Threefold rule for the ratio statistic: reject above 3, no effect at or
// below 1, region of doubt in between.
TestOutcome test_ip_constant3(const ContingencyTable& table,
                              DofConvention convention = DofConvention::anova);

// Two-category chi-square reference: I_P (ANOVA dof) against
// chi2_quantile(M-1, 1-alpha)/(M-1).  Defined for K = 2 only.
TestOutcome test_ip_chi2(const ContingencyTable& table, double alpha);

// Parametric bootstrap p-value under the pooled plug-in null:
// p = (1 + #{draws >= observed}) / (draws + 1).  Requires draws >= 100.
// For a lab-effect question use McStatistic::s2_between; I_N is invariant
// under redistribution among labs and its bootstrap p hovers near 1/2.
double mc_pvalue(const ContingencyTable& table, McStatistic statistic,
                 std::size_t draws, std::uint64_t seed,
                 const EngineOptions& options = {});

}  // namespace ordanova
