#include "ordanova/report.hpp"

#include <iomanip>
#include <sstream>

#include "ordanova/approx.hpp"
#include "ordanova/errors.hpp"
#include "ordanova/rng.hpp"
#include "ordanova/variation.hpp"
#include "ordanova/version.hpp"

namespace ordanova {

namespace {

using json = nlohmann::ordered_json;

json outcome_json(const TestOutcome& outcome) {
  json j;
  j["method"] = outcome.method;
  j["statistic"] = outcome.statistic;
  j["thresholds"] = outcome.thresholds;
  if (outcome.alpha) j["alpha"] = *outcome.alpha;
  j["decision"] = decision_name(outcome.decision);
  if (!outcome.note.empty()) j["note"] = outcome.note;
  return j;
}

void render_outcome(std::ostream& out, const TestOutcome& outcome) {
  out << "  " << outcome.method << "\n";
  out << "    statistic  " << outcome.statistic << "\n";
  if (!outcome.thresholds.empty()) {
    out << "    threshold";
    if (outcome.thresholds.size() > 1) out << "s";
    for (double t : outcome.thresholds) out << "  " << t;
    out << "\n";
  }
  if (outcome.alpha) out << "    alpha      " << *outcome.alpha << "\n";
  out << "    decision   " << decision_name(outcome.decision) << "\n";
  if (!outcome.note.empty()) out << "    note: " << outcome.note << "\n";
}

}  // namespace

Report analyze_table(const ContingencyTable& table, const AnalyzeOptions& options) {
  const VariationDecomposition var = decompose(table);
  const ProbabilityVector pooled = pooled_probabilities(table);
  const NormalApprox approx = normal_params(pooled, table.replicates(), table.labs());
  std::vector<std::string> notes;

  json j;
  j["tool"] = {{"name", "ordanova"}, {"version", kVersion}};
  j["input"] = {{"labs", table.labs()},
                {"categories", table.categories()},
                {"replicates_per_lab", table.replicates()},
                {"labels", table.labels()}};
  j["pooled"] = {{"p", pooled.p}, {"cumulative", pooled.F}};
  j["variation"] = {{"h2_total", var.h2_total},
                    {"h2_within", var.h2_within},
                    {"s2_between", var.s2_between},
                    {"h2_within_by_lab", var.h2_within_by_lab},
                    {"s2_between_by_boundary", var.s2_between_by_k}};

  // I_P under both dof conventions; the statistic is undefined when the
  // table has no variation at all.
  json ip_json;
  bool ip_defined = true;
  try {
    const double ip_anova = statistic_ip(table, DofConvention::anova);
    const DegreesOfFreedom dof_a =
        degrees_of_freedom(table.labs(), table.replicates(), DofConvention::anova);
    ip_json["anova"] = {{"value", ip_anova},
                        {"df_between", dof_a.between},
                        {"df_total", dof_a.total}};
    try {
      const double ip_pub = statistic_ip(table, DofConvention::published);
      const DegreesOfFreedom dof_p =
          degrees_of_freedom(table.labs(), table.replicates(), DofConvention::published);
      ip_json["published_convention"] = {{"value", ip_pub},
                                         {"df_between", dof_p.between},
                                         {"df_total", dof_p.total}};
    } catch (const InputError& e) {
      ip_json["published_convention"] = nullptr;
      notes.emplace_back(std::string("I_P under the published dof convention: ") + e.what());
    }
  } catch (const InputError& e) {
    ip_defined = false;
    ip_json = nullptr;
    notes.emplace_back(std::string("I_P: ") + e.what());
  }
  j["statistics"] = {{"i_n", statistic_in(table)}, {"i_p", ip_json}};

  j["normal_approx"] = {{"mu", approx.mu}, {"sigma2", approx.sigma2}};
  try {
    j["normal_approx"]["critical_value"] = critical_value(approx, options.alpha);
    j["normal_approx"]["alpha"] = options.alpha;
  } catch (const InputError&) {
    j["normal_approx"]["critical_value"] = nullptr;
    j["normal_approx"]["alpha"] = options.alpha;
  }

  std::vector<TestOutcome> outcomes;
  outcomes.push_back(test_in(table, options.alpha));
  if (ip_defined) {
    outcomes.push_back(test_ip_constant3(table, options.dof));
    if (table.categories() == 2) outcomes.push_back(test_ip_chi2(table, options.alpha));
  }
  json tests = json::array();
  for (const auto& outcome : outcomes) tests.push_back(outcome_json(outcome));
  j["tests"] = tests;

  if (options.mc_draws > 0) {
    json boot;
    boot["draws"] = options.mc_draws;
    boot["seed"] = options.seed;
    json pvals;
    pvals["s2_between"] = mc_pvalue(table, McStatistic::s2_between, options.mc_draws,
                                    derive_seed(options.seed, "bootstrap/s2_between"),
                                    options.engine);
    pvals["i_n"] = mc_pvalue(table, McStatistic::in, options.mc_draws,
                             derive_seed(options.seed, "bootstrap/i_n"), options.engine);
    if (ip_defined)
      pvals["i_p"] = mc_pvalue(table, McStatistic::ip, options.mc_draws,
                               derive_seed(options.seed, "bootstrap/i_p"), options.engine);
    else
      pvals["i_p"] = nullptr;
    boot["p_values"] = pvals;
    boot["note"] = "parametric bootstrap under the pooled plug-in null; s2_between is the "
                   "component that responds to laboratory effects";
    j["bootstrap"] = boot;
  }

  if (options.published_in) {
    j["published_comparison"] = {
        {"published_i_n", *options.published_in},
        {"computed_i_n", statistic_in(table)},
    };
    notes.emplace_back(
        "the original publication prints I_N = " +
        ([&] { std::ostringstream s; s << *options.published_in; return s.str(); })() +
        " for this table, which is not reproducible from the statistic's definition; the "
        "computed value satisfies the decomposition identity and reproduces the "
        "publication's own critical thresholds");
  }

  notes.emplace_back("I_P depends on the degrees-of-freedom convention; both are shown. The "
                     "chi-square/(M-1) reference and the simulated percentile grids match the "
                     "anova convention (df_between = M-1).");
  j["notes"] = notes;

  return Report{std::move(j)};
}

std::string Report::to_json_text() const { return json.dump(2) + "\n"; }

std::string Report::to_text() const {
  std::ostringstream out;
  out << std::setprecision(12);
  const auto& j = json;

  out << "ordanova " << j["tool"]["version"].get<std::string>() << "\n";
  out << "input: " << j["input"]["labs"] << " labs x " << j["input"]["categories"]
      << " categories, " << j["input"]["replicates_per_lab"] << " measurements per lab\n\n";

  out << "pooled category frequencies\n  p =";
  for (const auto& v : j["pooled"]["p"]) out << " " << v.get<double>();
  out << "\n  F =";
  for (const auto& v : j["pooled"]["cumulative"]) out << " " << v.get<double>();
  out << "\n\n";

  const auto& var = j["variation"];
  out << "variation decomposition\n";
  out << "  h2_total   " << var["h2_total"].get<double>() << "\n";
  out << "  h2_within  " << var["h2_within"].get<double>() << "\n";
  out << "  s2_between " << var["s2_between"].get<double>() << "\n";
  out << "  per lab h2_within:";
  for (const auto& v : var["h2_within_by_lab"]) out << " " << v.get<double>();
  out << "\n  per boundary s2_between:";
  for (const auto& v : var["s2_between_by_boundary"]) out << " " << v.get<double>();
  out << "\n\n";

  out << "statistics\n";
  out << "  I_N " << j["statistics"]["i_n"].get<double>() << "\n";
  if (j["statistics"]["i_p"].is_null()) {
    out << "  I_P undefined (no ordinal variation)\n";
  } else {
    const auto& ip = j["statistics"]["i_p"];
    out << "  I_P " << ip["anova"]["value"].get<double>() << "  (anova dof: between "
        << ip["anova"]["df_between"].get<double>() << ", total "
        << ip["anova"]["df_total"].get<double>() << ")\n";
    if (!ip["published_convention"].is_null())
      out << "  I_P " << ip["published_convention"]["value"].get<double>()
          << "  (published dof: between "
          << ip["published_convention"]["df_between"].get<double>() << ", total "
          << ip["published_convention"]["df_total"].get<double>() << ")\n";
  }
  out << "\n";

  const auto& na = j["normal_approx"];
  out << "normal approximation of I_N under the pooled null\n";
  out << "  mu     " << na["mu"].get<double>() << "\n";
  out << "  sigma2 " << na["sigma2"].get<double>() << "\n";
  if (!na["critical_value"].is_null())
    out << "  critical value at alpha " << na["alpha"].get<double>() << ": "
        << na["critical_value"].get<double>() << "\n";
  out << "\ntests\n";
  for (const auto& t : j["tests"]) {
    TestOutcome outcome;
    outcome.method = t["method"].get<std::string>();
    outcome.statistic = t["statistic"].get<double>();
    outcome.thresholds = t["thresholds"].get<std::vector<double>>();
    if (t.contains("alpha")) outcome.alpha = t["alpha"].get<double>();
    const std::string d = t["decision"].get<std::string>();
    outcome.decision = d == "reject"       ? Decision::reject
                       : d == "doubt"      ? Decision::doubt
                       : d == "degenerate" ? Decision::degenerate
                                           : Decision::no_reject;
    if (t.contains("note")) outcome.note = t["note"].get<std::string>();
    render_outcome(out, outcome);
  }

  if (j.contains("bootstrap")) {
    const auto& b = j["bootstrap"];
    out << "\nbootstrap p-values (" << b["draws"] << " draws, seed " << b["seed"] << ")\n";
    for (const auto& [key, value] : b["p_values"].items()) {
      out << "  " << key << "  ";
      if (value.is_null())
        out << "undefined\n";
      else
        out << value.get<double>() << "\n";
    }
  }

  if (j.contains("published_comparison")) {
    const auto& pc = j["published_comparison"];
    out << "\npublished comparison\n";
    out << "  published I_N " << pc["published_i_n"].get<double>() << "\n";
    out << "  computed  I_N " << pc["computed_i_n"].get<double>() << "\n";
  }

  out << "\nnotes\n";
  for (const auto& note : j["notes"]) out << "  - " << note.get<std::string>() << "\n";
  return out.str();
}

}  // namespace ordanova
