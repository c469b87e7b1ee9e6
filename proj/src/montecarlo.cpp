#include "ordanova/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

#include "ordanova/errors.hpp"
#include "ordanova/rng.hpp"

namespace ordanova {

namespace {

// Category for one observation: smallest k with u < F_k.  F.back() is 1 up
// to rounding, so clamp to the last category.
std::size_t pick_category(double u, const std::vector<double>& F) {
  for (std::size_t k = 0; k + 1 < F.size(); ++k)
    if (u < F[k]) return k;
  return F.size() - 1;
}

void validate(const SimConfig& config) {
  if (config.labs < 2) throw InputError("simulation needs at least 2 labs");
  if (config.reps_per_lab < 1) throw InputError("simulation needs at least 1 measurement per lab");
  if (config.draws < 1) throw InputError("simulation needs at least 1 draw");
  if (config.null_p.categories() < 2 || config.null_p.p.size() != config.null_p.F.size())
    throw InputError("simulation needs a valid probability vector");
}

// Draws for the pooled statistic I_N.  Only the weighted count sum varies
// between replications; the F^2 term is a constant of the null.  The sum is
// integer arithmetic, so this path is exact and needs no kernel.
void run_in_range(const SimConfig& config, std::size_t first, std::size_t last,
                  double* values) {
  const std::size_t K = config.null_p.categories();
  const double scale = 4.0 / static_cast<double>(K - 1);
  const double grand =
      static_cast<double>(config.reps_per_lab) * static_cast<double>(config.labs);

  double f_sq_null = 0.0;
  for (std::size_t k = 0; k + 1 < K; ++k)
    f_sq_null += config.null_p.F[k] * config.null_p.F[k];
  const double offset = scale * f_sq_null;

  for (std::size_t rep = first; rep < last; ++rep) {
    auto stream = replication_stream(config.seed, rep);
    std::uint64_t weighted = 0;
    for (std::size_t m = 0; m < config.labs; ++m)
      for (std::int64_t i = 0; i < config.reps_per_lab; ++i) {
        const std::size_t cat = pick_category(stream.next_uniform(), config.null_p.F);
        weighted += static_cast<std::uint64_t>(K - 1 - cat);
      }
    values[rep] = scale * (static_cast<double>(weighted) / grand) - offset;
  }
}

// Draws for the empirical statistics (ip, s2_between): sample count tables
// into a lane-interleaved batch and run the decomposition kernel.  Lanes are
// independent (the kernel has no cross-lane operations), so batch boundaries
// and padding cannot influence any replication's value.
void run_empirical_range(const SimConfig& config, const kernels::Kernel& kernel,
                         std::size_t first, std::size_t last, double* values) {
  const std::size_t K = config.null_p.categories();
  const std::size_t M = config.labs;
  const std::size_t W = kernel.lanes;
  const std::size_t cells = M * K;

  double df_between = 1.0, df_total = 1.0;
  if (config.statistic == McStatistic::ip) {
    const DegreesOfFreedom dof =
        degrees_of_freedom(M, config.reps_per_lab, config.dof);
    df_between = dof.between;
    df_total = dof.total;
  }

  std::vector<double> counts(cells * W);
  std::vector<double> h2_total(W), h2_within(W), s2_between(W);

  for (std::size_t base = first; base < last; base += W) {
    const std::size_t live = std::min(W, last - base);
    for (std::size_t lane = 0; lane < live; ++lane) {
      auto stream = replication_stream(config.seed, base + lane);
      for (std::size_t cell = 0; cell < cells; ++cell) counts[cell * W + lane] = 0.0;
      for (std::size_t m = 0; m < M; ++m)
        for (std::int64_t i = 0; i < config.reps_per_lab; ++i) {
          const std::size_t cat = pick_category(stream.next_uniform(), config.null_p.F);
          counts[(m * K + cat) * W + lane] += 1.0;
        }
    }
    // Pad unused lanes with a copy of the last live replication; their
    // outputs are discarded below.
    for (std::size_t lane = live; lane < W; ++lane)
      for (std::size_t cell = 0; cell < cells; ++cell)
        counts[cell * W + lane] = counts[cell * W + (live - 1)];

    kernel.decompose_batch(counts.data(), M, K, static_cast<double>(config.reps_per_lab),
                           h2_total.data(), h2_within.data(), s2_between.data());

    for (std::size_t lane = 0; lane < live; ++lane) {
      if (config.statistic == McStatistic::s2_between) {
        values[base + lane] = s2_between[lane];
      } else if (h2_total[lane] == 0.0) {
        // A replication where every observation landed in one category has
        // no ordinal variation; record +inf so it stays in the upper tail
        // instead of being dropped.
        values[base + lane] = std::numeric_limits<double>::infinity();
      } else {
        values[base + lane] = (s2_between[lane] / df_between) / (h2_total[lane] / df_total);
      }
    }
  }
}

}  // namespace

std::vector<std::int64_t> sample_multinomial(Xoshiro256StarStar& stream, std::int64_t n,
                                             const ProbabilityVector& p) {
  if (n < 1) throw InputError("multinomial sample needs n >= 1");
  std::vector<std::int64_t> counts(p.categories(), 0);
  for (std::int64_t i = 0; i < n; ++i) ++counts[pick_category(stream.next_uniform(), p.F)];
  return counts;
}

McDistribution simulate_distribution(const SimConfig& config, const EngineOptions& options) {
  validate(config);
  const kernels::Kernel& kernel = kernels::select_kernel(options.kernel);

  McDistribution dist;
  dist.config = config;
  dist.values.resize(config.draws);

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(options.workers, config.draws));

  auto run_range = [&](std::size_t first, std::size_t last) {
    if (config.statistic == McStatistic::in)
      run_in_range(config, first, last, dist.values.data());
    else
      run_empirical_range(config, kernel, first, last, dist.values.data());
  };

  if (workers == 1) {
    run_range(0, config.draws);
  } else {
    // Contiguous chunks; every replication's stream depends only on
    // (seed, index), so the partition cannot change any value.
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = config.draws * w / workers;
      const std::size_t last = config.draws * (w + 1) / workers;
      threads.emplace_back([&, w, first, last] {
        try {
          run_range(first, last);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::sort(dist.values.begin(), dist.values.end());
  return dist;
}

double upper_percentile(const McDistribution& dist, double alpha) {
  if (dist.values.empty()) throw InputError("empty distribution has no percentile");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InputError("alpha must be in (0, 1), got " + std::to_string(alpha));
  const std::size_t draws = dist.values.size();
  // Rank from the top.  The tiny slack keeps an exact product like
  // 0.05 * 10000 from rounding up to 501 in floating point.
  const double raw = std::ceil(alpha * static_cast<double>(draws) - 1e-9);
  const std::size_t rank =
      std::min<std::size_t>(draws, std::max<std::size_t>(1, static_cast<std::size_t>(raw)));
  return dist.values[draws - rank];
}

double tail_fraction(const McDistribution& dist, double threshold) {
  const auto it = std::lower_bound(dist.values.begin(), dist.values.end(), threshold);
  return static_cast<double>(dist.values.end() - it) /
         static_cast<double>(dist.values.size());
}

std::vector<EcdfRow> ecdf_rows(const McDistribution& dist) {
  std::vector<EcdfRow> rows;
  const std::size_t draws = dist.values.size();
  for (std::size_t i = 0; i < draws;) {
    std::size_t j = i;
    while (j + 1 < draws && dist.values[j + 1] == dist.values[i]) ++j;
    rows.push_back({dist.values[i], static_cast<double>(j + 1) / static_cast<double>(draws)});
    i = j + 1;
  }
  return rows;
}

void write_ecdf_csv(std::ostream& out, const McDistribution& dist) {
  out << "value,cumulative_fraction\n";
  const auto rows = ecdf_rows(dist);
  out << std::setprecision(17);
  for (const auto& row : rows) out << row.value << ',' << row.cumulative << '\n';
}

double ks_distance_normal(const McDistribution& dist, const NormalApprox& approx) {
  if (!(approx.sigma2 > 0.0))
    throw InputError("KS distance against a zero-variance normal is undefined");
  const double sd = std::sqrt(approx.sigma2);
  const double draws = static_cast<double>(dist.values.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < dist.values.size(); ++i) {
    const double model = std_normal_cdf((dist.values[i] - approx.mu) / sd);
    ks = std::max(ks, std::max(model - static_cast<double>(i) / draws,
                               static_cast<double>(i + 1) / draws - model));
  }
  return ks;
}

double ks_distance_scaled_chi2(const McDistribution& dist, std::size_t labs) {
  if (labs < 2) throw InputError("scaled chi-square reference needs M >= 2");
  const double df = static_cast<double>(labs) - 1.0;
  const double draws = static_cast<double>(dist.values.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < dist.values.size(); ++i) {
    const double v = dist.values[i];
    const double model = std::isfinite(v) ? chi2_cdf(v * df, df) : 1.0;
    ks = std::max(ks, std::max(model - static_cast<double>(i) / draws,
                               static_cast<double>(i + 1) / draws - model));
  }
  return ks;
}

}  // namespace ordanova
