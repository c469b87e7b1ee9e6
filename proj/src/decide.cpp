#include "ordanova/decide.hpp"

#include <algorithm>
#include <string>

#include "ordanova/approx.hpp"
#include "ordanova/errors.hpp"
#include "ordanova/variation.hpp"

namespace ordanova {

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::reject: return "reject";
    case Decision::no_reject: return "no-reject";
    case Decision::doubt: return "doubt";
    case Decision::degenerate: return "degenerate";
  }
  return "unknown";
}

TestOutcome test_in(const ContingencyTable& table, double alpha,
                    const std::optional<ProbabilityVector>& null_p) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InputError("alpha must be in (0, 1), got " + std::to_string(alpha));
  if (null_p && null_p->categories() != table.categories())
    throw InputError("external null has " + std::to_string(null_p->categories()) +
                     " categories but the table has " + std::to_string(table.categories()));

  TestOutcome out;
  out.method = "normal approximation, upper-tail test of I_N";
  out.alpha = alpha;
  out.statistic = statistic_in(table);

  const ProbabilityVector& null_dist = null_p ? *null_p : pooled_probabilities(table);
  const NormalApprox approx =
      normal_params(null_dist, table.replicates(), table.labs());
  if (approx.sigma2 <= 0.0) {
    out.decision = Decision::degenerate;
    out.note = "the null puts all probability in one category, so the approximate null "
               "distribution has zero variance and no test is possible";
    return out;
  }

  out.thresholds.push_back(critical_value(approx, alpha));
  out.decision = out.statistic > out.thresholds[0] ? Decision::reject : Decision::no_reject;
  if (!null_p)
    out.note = "null parameters are plugged in from the pooled table frequencies, which makes "
               "the observed I_N equal the null mean exactly; this test can therefore never "
               "reject. For a laboratory-effect question, supply an external null or use the "
               "bootstrap p-value of s2_between.";
  return out;
}

TestOutcome test_ip_constant3(const ContingencyTable& table, DofConvention convention) {
  TestOutcome out;
  out.method = "threefold rule for I_P";
  out.statistic = statistic_ip(table, convention);
  out.thresholds = {1.0, 3.0};
  if (out.statistic > 3.0)
    out.decision = Decision::reject;
  else if (out.statistic > 1.0)
    out.decision = Decision::doubt;
  else
    out.decision = Decision::no_reject;
  return out;
}

TestOutcome test_ip_chi2(const ContingencyTable& table, double alpha) {
  if (table.categories() != 2)
    throw InputError("chi-square approximation defined only for K=2, got K=" +
                     std::to_string(table.categories()));
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InputError("alpha must be in (0, 1), got " + std::to_string(alpha));

  TestOutcome out;
  out.method = "chi-square/(M-1) reference for I_P, K=2";
  out.alpha = alpha;
  out.statistic = statistic_ip(table, DofConvention::anova);
  const double df = static_cast<double>(table.labs()) - 1.0;
  out.thresholds.push_back(chi2_quantile(df, 1.0 - alpha) / df);
  out.decision = out.statistic > out.thresholds[0] ? Decision::reject : Decision::no_reject;
  return out;
}

double mc_pvalue(const ContingencyTable& table, McStatistic statistic, std::size_t draws,
                 std::uint64_t seed, const EngineOptions& options) {
  if (draws < 100)
    throw InputError("bootstrap p-value needs at least 100 draws, got " +
                     std::to_string(draws));

  // The ratio statistic rescales by an exact constant between dof
  // conventions, so the p-value does not depend on the convention; the
  // engine runs the default.
  double observed = 0.0;
  switch (statistic) {
    case McStatistic::ip: observed = statistic_ip(table); break;
    case McStatistic::in: observed = statistic_in(table); break;
    case McStatistic::s2_between: observed = decompose(table).s2_between; break;
  }

  SimConfig config;
  config.null_p = pooled_probabilities(table);
  config.labs = table.labs();
  config.reps_per_lab = table.replicates();
  config.draws = draws;
  config.seed = seed;
  config.statistic = statistic;
  const McDistribution dist = simulate_distribution(config, options);

  const auto it = std::lower_bound(dist.values.begin(), dist.values.end(), observed);
  const auto at_or_above = static_cast<double>(dist.values.end() - it);
  return (1.0 + at_or_above) / (static_cast<double>(draws) + 1.0);
}

}  // namespace ordanova
