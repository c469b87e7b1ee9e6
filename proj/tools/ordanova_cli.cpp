// Command-line front end: analyze a measurement table, simulate null
// distributions, reproduce the published simulation grids and figure data,
// or run the embedded worked examples.
//
// Exit codes: 0 success, 2 invalid input (bad flags, unreadable or invalid
// data), 3 internal error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ordanova/approx.hpp"
#include "ordanova/datasets.hpp"
#include "ordanova/decide.hpp"
#include "ordanova/errors.hpp"
#include "ordanova/montecarlo.hpp"
#include "ordanova/report.hpp"
#include "ordanova/rng.hpp"
#include "ordanova/variation.hpp"
#include "ordanova/version.hpp"

namespace {

using namespace ordanova;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

DofConvention parse_dof(const std::string& name) {
  if (name == "consistent" || name == "anova") return DofConvention::anova;
  if (name == "published") return DofConvention::published;
  throw InputError("unknown dof convention '" + name +
                   "' (expected consistent, anova, or published)");
}

// Probabilities as a comma-separated list; each entry is a decimal or a
// fraction like 3/6.
ProbabilityVector parse_probs(const std::string& text) {
  std::vector<double> probs;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto slash = token.find('/');
    try {
      if (slash == std::string::npos) {
        probs.push_back(std::stod(token));
      } else {
        const double num = std::stod(token.substr(0, slash));
        const double den = std::stod(token.substr(slash + 1));
        if (den == 0.0) throw InputError("zero denominator in '" + token + "'");
        probs.push_back(num / den);
      }
    } catch (const std::logic_error&) {
      throw InputError("cannot parse probability '" + token + "'");
    }
  }
  return ProbabilityVector::from_probabilities(std::move(probs), 1e-9);
}

McStatistic parse_statistic(const std::string& name) {
  if (name == "ip") return McStatistic::ip;
  if (name == "in") return McStatistic::in;
  if (name == "s2b") return McStatistic::s2_between;
  throw InputError("unknown statistic '" + name + "' (expected ip, in, or s2b)");
}

struct EngineFlags {
  unsigned workers = 1;
  std::string kernel = "auto";

  EngineOptions options() const { return {workers, kernels::parse_choice(kernel)}; }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
  cmd->add_option("--workers", flags.workers, "Worker threads for simulation")
      ->default_val(1u);
  cmd->add_option("--kernel", flags.kernel,
                  "Batch kernel: auto, scalar, avx2, neon")
      ->default_val("auto");
}

// ---------------------------------------------------------------- analyze

int run_analyze_text(const std::string& csv, double alpha, const std::string& dof,
                     std::size_t mc_draws, std::uint64_t seed, const std::string& format,
                     const EngineFlags& engine, std::optional<double> published_in = {}) {
  const ContingencyTable table = parse_table(csv);
  AnalyzeOptions options;
  options.alpha = alpha;
  options.dof = parse_dof(dof);
  options.mc_draws = mc_draws;
  options.seed = seed;
  options.engine = engine.options();
  options.published_in = published_in;

  const Report report = analyze_table(table, options);
  if (format == "json")
    std::cout << report.to_json_text();
  else if (format == "text")
    std::cout << report.to_text();
  else
    throw InputError("unknown format '" + format + "' (expected json or text)");
  return 0;
}

int run_analyze(const std::string& path, double alpha, const std::string& dof,
                std::size_t mc_draws, std::uint64_t seed, const std::string& format,
                const EngineFlags& engine) {
  return run_analyze_text(read_input(path), alpha, dof, mc_draws, seed, format, engine);
}

// --------------------------------------------------------------- simulate

int run_simulate(const ProbabilityVector& probs, std::size_t labs, std::int64_t reps_per_lab,
                 std::size_t draws, std::uint64_t seed, const std::string& statistic,
                 const std::string& dof, double alpha, const std::string& ecdf_out,
                 const EngineFlags& engine) {
  SimConfig config;
  config.null_p = probs;
  config.labs = labs;
  config.reps_per_lab = reps_per_lab;
  config.draws = draws;
  config.seed = seed;
  config.statistic = parse_statistic(statistic);
  config.dof = parse_dof(dof);

  const McDistribution dist = simulate_distribution(config, engine.options());

  std::size_t infinite = 0;
  double mean = 0.0, m2 = 0.0;
  std::size_t finite = 0;
  for (const double v : dist.values) {
    if (!std::isfinite(v)) {
      ++infinite;
      continue;
    }
    ++finite;
    const double delta = v - mean;
    mean += delta / static_cast<double>(finite);
    m2 += delta * (v - mean);
  }
  const double variance = finite > 1 ? m2 / static_cast<double>(finite - 1) : 0.0;

  std::cout << std::setprecision(12);
  std::cout << "statistic " << statistic << ", labs " << labs << ", reps-per-lab "
            << reps_per_lab << ", draws " << draws << ", seed " << seed << "\n";
  std::cout << "null p =";
  for (const double p : config.null_p.p) std::cout << " " << p;
  std::cout << "\n";
  std::cout << "mean       " << mean << "\n";
  std::cout << "variance   " << variance << "\n";
  std::cout << "upper " << 100.0 * alpha << "%   " << upper_percentile(dist, alpha) << "\n";
  if (config.statistic == McStatistic::ip)
    std::cout << "tail >= 3  " << tail_fraction(dist, 3.0) << "\n";
  if (infinite > 0)
    std::cout << "draws with no ordinal variation (recorded +inf): " << infinite << "\n";

  if (!ecdf_out.empty()) {
    std::ofstream out(ecdf_out, std::ios::binary);
    if (!out) throw InputError("cannot open '" + ecdf_out + "' for writing");
    write_ecdf_csv(out, dist);
    std::cout << "ecdf written to " << ecdf_out << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- reproduce

// Published I_P grids: simulated upper-5% percentile and tail >= 3.
void reproduce_ip_grid(const std::string& target, const ProbabilityVector& null_p,
                       const std::vector<datasets::IpReferenceRow>& reference,
                       std::uint64_t seed, std::size_t draws, const EngineOptions& engine) {
  std::cout << "target " << target
            << ": ratio statistic I_P, 3-category null, 10000-draw percentile grid\n";
  std::cout << "null p =";
  std::cout << std::setprecision(12);
  for (const double p : null_p.p) std::cout << " " << p;
  std::cout << ", seed " << seed << ", draws " << draws << "\n\n";
  std::cout << "labs  n   published  computed  |diff|   pub_tail%  comp_tail%  |diff|pp  flag\n";

  std::cout << std::fixed << std::setprecision(4);
  for (const auto& row : reference) {
    SimConfig config;
    config.null_p = null_p;
    config.labs = row.labs;
    config.reps_per_lab = row.reps_per_lab;
    config.draws = draws;
    config.statistic = McStatistic::ip;
    std::ostringstream tag;
    tag << target << "/M=" << row.labs << "/n=" << row.reps_per_lab;
    config.seed = derive_seed(seed, tag.str());

    const McDistribution dist = simulate_distribution(config, engine);
    const double upper5 = upper_percentile(dist, 0.05);
    const double tail_pct = 100.0 * tail_fraction(dist, 3.0);
    const double diff = std::abs(upper5 - row.upper5);
    const double tail_diff = std::abs(tail_pct - row.tail_percent);
    const bool ok = diff <= 0.08 && tail_diff <= 0.4;

    std::cout << std::left << std::setw(6) << row.labs << std::setw(4) << row.reps_per_lab
              << std::right << std::setw(9) << row.upper5 << std::setw(10) << upper5
              << std::setw(8) << diff << std::setw(11) << row.tail_percent << std::setw(12)
              << tail_pct << std::setw(10) << tail_diff << "  " << (ok ? "ok" : "DEVIATES")
              << "\n";
  }
  std::cout.unsetf(std::ios::fixed);
  std::cout << "\n";
}

// Published I_N grids: simulated and approximate upper-5% percentiles.
void reproduce_in_grid(const std::string& target, const ProbabilityVector& null_p,
                       const std::vector<datasets::InReferenceRow>& reference,
                       std::uint64_t seed, std::size_t draws, const EngineOptions& engine) {
  std::cout << "target " << target
            << ": statistic I_N, simulated vs normal-approximation upper-5% percentiles\n";
  std::cout << std::setprecision(12);
  std::cout << "null p =";
  for (const double p : null_p.p) std::cout << " " << p;
  std::cout << ", seed " << seed << ", draws " << draws << "\n\n";
  std::cout << "labs  n   pub_sim  comp_sim  |diff|   pub_approx  comp_approx  |diff|   flag\n";

  std::cout << std::fixed << std::setprecision(4);
  for (const auto& row : reference) {
    SimConfig config;
    config.null_p = null_p;
    config.labs = row.labs;
    config.reps_per_lab = row.reps_per_lab;
    config.draws = draws;
    config.statistic = McStatistic::in;
    std::ostringstream tag;
    tag << target << "/M=" << row.labs << "/n=" << row.reps_per_lab;
    config.seed = derive_seed(seed, tag.str());

    const McDistribution dist = simulate_distribution(config, engine);
    const double sim = upper_percentile(dist, 0.05);
    const NormalApprox approx = normal_params(null_p, row.reps_per_lab, row.labs);
    const double approximate = critical_value(approx, 0.05);

    const double sim_diff = std::abs(sim - row.simulated_upper5);
    const double approx_diff = std::abs(approximate - row.approx_upper5);
    std::string flag;
    if (row.known_discrepancy)
      flag = "published-discrepancy";  // see note below the grid
    else
      flag = (sim_diff <= 0.05 && approx_diff <= 0.01) ? "ok" : "DEVIATES";

    std::cout << std::left << std::setw(6) << row.labs << std::setw(4) << row.reps_per_lab
              << std::right << std::setw(7) << row.simulated_upper5 << std::setw(10) << sim
              << std::setw(8) << sim_diff << std::setw(12) << row.approx_upper5
              << std::setw(13) << approximate << std::setw(8) << approx_diff << "   " << flag
              << "\n";
  }
  std::cout.unsetf(std::ios::fixed);
  std::cout << "\nnote: rows with n=20 are a known inconsistency in the published grid — the\n"
               "I_N null distribution depends on (n, M) only through nM, so e.g. (5,20) and\n"
               "(20,5) must match, yet the published values differ. The computed column shows\n"
               "the self-consistent values.\n\n";
}

void write_panel_ecdf(const std::filesystem::path& path, const McDistribution& dist) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  write_ecdf_csv(out, dist);
}

void write_overlay(const std::filesystem::path& path, const McDistribution& dist,
                   const NormalApprox& approx) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  const double sd = std::sqrt(approx.sigma2);
  const double lo = std::min(dist.values.front(), approx.mu - 4.0 * sd);
  const double hi = std::max(dist.values.back(), approx.mu + 4.0 * sd);
  out << "value,approx_cdf\n" << std::setprecision(17);
  constexpr int kPoints = 512;
  for (int i = 0; i < kPoints; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (kPoints - 1);
    out << x << ',' << std_normal_cdf((x - approx.mu) / sd) << '\n';
  }
}

int run_reproduce_figures(std::uint64_t seed, std::size_t draws, const std::string& out_dir,
                          const EngineOptions& engine) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  struct Panel {
    std::size_t labs;
    std::int64_t reps;
  };
  const Panel panels[] = {{5, 5}, {5, 20}, {20, 5}, {20, 20}};
  struct Figure {
    int number;
    McStatistic statistic;
    const ProbabilityVector& null_p;
  };
  const Figure figures[] = {
      {1, McStatistic::ip, datasets::case_a()},
      {2, McStatistic::ip, datasets::case_b()},
      {3, McStatistic::in, datasets::case_a()},
      {4, McStatistic::in, datasets::case_b()},
  };

  std::cout << std::setprecision(6);
  for (const auto& figure : figures) {
    for (const auto& panel : panels) {
      SimConfig config;
      config.null_p = figure.null_p;
      config.labs = panel.labs;
      config.reps_per_lab = panel.reps;
      config.draws = draws;
      config.statistic = figure.statistic;
      std::ostringstream tag;
      tag << "figure" << figure.number << "/M=" << panel.labs << "/n=" << panel.reps;
      config.seed = derive_seed(seed, tag.str());

      const McDistribution dist = simulate_distribution(config, engine);
      std::ostringstream name;
      name << "figure" << figure.number << "_M" << panel.labs << "_n" << panel.reps;
      write_panel_ecdf(dir / (name.str() + ".csv"), dist);

      std::cout << name.str() << ": " << dist.values.size() << " draws";
      if (figure.statistic == McStatistic::in) {
        const NormalApprox approx = normal_params(figure.null_p, panel.reps, panel.labs);
        write_overlay(dir / (name.str() + "_approx.csv"), dist, approx);
        std::cout << ", KS distance to the normal approximation "
                  << ks_distance_normal(dist, approx);
      }
      std::cout << "\n";
    }
  }
  std::cout << "figure data written to " << dir.string() << "\n";
  return 0;
}

int run_reproduce(const std::string& target, std::uint64_t seed, std::size_t draws,
                  const std::string& out_dir, const EngineFlags& engine) {
  const EngineOptions options = engine.options();
  if (target == "table1")
    reproduce_ip_grid(target, datasets::case_a(), datasets::ip_reference_case_a(), seed,
                      draws, options);
  else if (target == "table2")
    reproduce_ip_grid(target, datasets::case_b(), datasets::ip_reference_case_b(), seed,
                      draws, options);
  else if (target == "table5")
    reproduce_in_grid(target, datasets::case_a(), datasets::in_reference_case_a(), seed,
                      draws, options);
  else if (target == "table6")
    reproduce_in_grid(target, datasets::case_b(), datasets::in_reference_case_b(), seed,
                      draws, options);
  else if (target == "figures")
    return run_reproduce_figures(seed, draws, out_dir, options);
  else
    throw InputError("unknown target '" + target +
                     "' (expected table1, table2, table5, table6, or figures)");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal analysis of variation for interlaboratory studies"};
  app.set_version_flag("--version", std::string("ordanova ") + kVersion);
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  double analyze_alpha = 0.05;
  std::string analyze_dof = "consistent";
  std::size_t analyze_mc_reps = 0;
  std::uint64_t analyze_seed = 1;
  std::string analyze_format = "text";
  EngineFlags analyze_engine;
  auto* analyze = app.add_subcommand("analyze", "Analyze a lab-by-category CSV table");
  analyze->add_option("csv", analyze_path, "Input CSV path, or - for stdin")->required();
  analyze->add_option("--alpha", analyze_alpha, "Significance level")->default_val(0.05);
  analyze->add_option("--dof", analyze_dof,
                      "Dof convention for I_P: consistent (anova) or published")
      ->default_val("consistent");
  analyze->add_option("--mc-reps", analyze_mc_reps,
                      "Bootstrap draws for p-values (0 = off)")
      ->default_val(0u);
  analyze->add_option("--seed", analyze_seed, "Bootstrap seed")->default_val(1u);
  analyze->add_option("--format", analyze_format, "Output format: text or json")
      ->default_val("text");
  add_engine_flags(analyze, analyze_engine);

  // simulate
  std::string sim_probs;
  std::size_t sim_labs = 0;
  std::int64_t sim_reps_per_lab = 0;
  std::size_t sim_draws = 10000;
  std::uint64_t sim_seed = 1;
  std::string sim_statistic = "in";
  std::string sim_dof = "consistent";
  double sim_alpha = 0.05;
  std::string sim_ecdf_out;
  EngineFlags sim_engine;
  auto* simulate = app.add_subcommand("simulate", "Simulate a statistic's null distribution");
  simulate->add_option("--probs", sim_probs,
                       "Null probabilities, e.g. 1/3,1/3,1/3 or 0.5,0.3,0.2")
      ->required();
  simulate->add_option("--labs", sim_labs, "Number of laboratories M")->required();
  simulate->add_option("--reps-per-lab", sim_reps_per_lab, "Measurements per lab n")
      ->required();
  simulate->add_option("--draws", sim_draws, "Monte Carlo draws")->default_val(10000u);
  simulate->add_option("--seed", sim_seed, "Simulation seed")->default_val(1u);
  simulate->add_option("--statistic", sim_statistic, "Statistic: ip, in, or s2b")
      ->default_val("in");
  simulate->add_option("--dof", sim_dof, "Dof convention for ip")->default_val("consistent");
  simulate->add_option("--alpha", sim_alpha, "Upper percentile to report")->default_val(0.05);
  simulate->add_option("--ecdf-out", sim_ecdf_out, "Write the ECDF as CSV to this path");
  add_engine_flags(simulate, sim_engine);

  // reproduce
  std::string repro_target;
  std::uint64_t repro_seed = 1;
  std::size_t repro_draws = 10000;
  std::string repro_out_dir = "figures";
  EngineFlags repro_engine;
  auto* reproduce = app.add_subcommand(
      "reproduce", "Recompute the published simulation grids and figure data");
  reproduce->add_option("target", repro_target, "table1, table2, table5, table6, or figures")
      ->required();
  reproduce->add_option("--seed", repro_seed, "Base seed")->default_val(1u);
  reproduce->add_option("--draws", repro_draws, "Draws per grid cell")->default_val(10000u);
  reproduce->add_option("--out-dir", repro_out_dir, "Output directory for figure data")
      ->default_val("figures");
  add_engine_flags(reproduce, repro_engine);

  // example
  std::string example_name;
  double example_alpha = 0.05;
  std::size_t example_mc_reps = 0;
  std::uint64_t example_seed = 1;
  std::string example_format = "text";
  EngineFlags example_engine;
  auto* example = app.add_subcommand("example", "Analyze an embedded worked example");
  example->add_option("name", example_name, "table3 or table4")->required();
  example->add_option("--alpha", example_alpha, "Significance level")->default_val(0.05);
  example->add_option("--mc-reps", example_mc_reps,
                      "Bootstrap draws for p-values (0 = off)")
      ->default_val(0u);
  example->add_option("--seed", example_seed, "Bootstrap seed")->default_val(1u);
  example->add_option("--format", example_format, "Output format: text or json")
      ->default_val("text");
  add_engine_flags(example, example_engine);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  try {
    if (*analyze)
      return run_analyze(analyze_path, analyze_alpha, analyze_dof, analyze_mc_reps,
                         analyze_seed, analyze_format, analyze_engine);
    if (*simulate)
      return run_simulate(parse_probs(sim_probs), sim_labs, sim_reps_per_lab, sim_draws,
                          sim_seed, sim_statistic, sim_dof, sim_alpha, sim_ecdf_out,
                          sim_engine);
    if (*reproduce)
      return run_reproduce(repro_target, repro_seed, repro_draws, repro_out_dir,
                           repro_engine);
    if (*example) {
      std::string csv;
      std::optional<double> published;
      if (example_name == "table3") {
        csv = datasets::illustrative_csv();
        published = datasets::kIllustrativePublishedIn;
      } else if (example_name == "table4") {
        csv = datasets::rearranged_csv();
        published = datasets::kRearrangedPublishedIn;
      } else {
        throw InputError("unknown example '" + example_name +
                         "' (expected table3 or table4)");
      }
      return run_analyze_text(csv, example_alpha, "consistent", example_mc_reps,
                              example_seed, example_format, example_engine, published);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
