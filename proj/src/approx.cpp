#include "ordanova/approx.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ordanova/errors.hpp"

namespace ordanova {

NormalApprox normal_params(const ProbabilityVector& null_p, std::int64_t replicates,
                           std::size_t labs) {
  const std::size_t K = null_p.categories();
  if (replicates < 1) throw InputError("replicates per lab must be >= 1");
  if (labs < 1) throw InputError("lab count must be >= 1");

  const double scale = 4.0 / static_cast<double>(K - 1);

  // Weights over the first K-1 categories: w_k = K-k for 1-based k, i.e.
  // the number of cumulative boundaries an observation in category k crosses.
  double weighted_p = 0.0;       // sum w_k p_k
  double f_sq = 0.0;             // sum F_k^2 over the boundaries
  double diag = 0.0;             // sum w_k^2 p_k (1-p_k)
  double w_sq_p_sq = 0.0;        // sum w_k^2 p_k^2
  for (std::size_t k = 0; k + 1 < K; ++k) {
    const double w = static_cast<double>(K - 1 - k);
    const double p = null_p.p[k];
    weighted_p += w * p;
    f_sq += null_p.F[k] * null_p.F[k];
    diag += w * w * p * (1.0 - p);
    w_sq_p_sq += w * w * p * p;
  }
  const double cross = weighted_p * weighted_p - w_sq_p_sq;  // sum_{k!=l} w_k w_l p_k p_l

  NormalApprox a;
  a.categories = K;
  a.labs = labs;
  a.replicates = replicates;
  // Equal to scale * sum F(1-F) algebraically; tiny negative values can only
  // arise from rounding in near-degenerate cases, so pin the lower bound.
  a.mu = std::max(0.0, scale * (weighted_p - f_sq));
  const double nm = static_cast<double>(replicates) * static_cast<double>(labs);
  const double var_scale =
      16.0 / (nm * static_cast<double>(K - 1) * static_cast<double>(K - 1));
  a.sigma2 = std::max(0.0, var_scale * (diag - cross));
  return a;
}

GaussianCountModel gaussian_count_model(const ProbabilityVector& p, std::int64_t n) {
  if (n < 1) throw InputError("count model needs n >= 1");
  const std::size_t d = p.categories() - 1;  // first K-1 categories
  const double nn = static_cast<double>(n);

  GaussianCountModel model;
  model.mean.resize(d);
  model.cov.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    model.mean[i] = nn * p.p[i];
    for (std::size_t j = 0; j < d; ++j)
      model.cov[i * d + j] =
          (i == j) ? nn * p.p[i] * (1.0 - p.p[i]) : -nn * p.p[i] * p.p[j];
  }
  return model;
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

namespace {

// Rational minimax approximation of the standard normal quantile
// (Wichura's PPND16 coefficient set), good to ~1e-15 on its own.
double normal_quantile_rational(double q) {
  const double r = q - 0.5;
  if (std::abs(r) <= 0.425) {
    const double s = 0.180625 - r * r;
    const double num =
        r * (((((((2.5090809287301226727e+3 * s + 3.3430575583588128105e+4) * s +
                   6.7265770927008700853e+4) * s + 4.5921953931549871457e+4) * s +
                 1.3731693765509461125e+4) * s + 1.9715909503065514427e+3) * s +
               1.3314166789178437745e+2) * s + 3.3871328727963666080e+0);
    const double den =
        ((((((5.2264952788528545610e+3 * s + 2.8729085735721942674e+4) * s +
             3.9307895800092710610e+4) * s + 2.1213794301586595867e+4) * s +
           5.3941960214247511077e+3) * s + 6.8718700749205790830e+2) * s +
         4.2313330701600911252e+1) * s + 1.0;
    return num / den;
  }

  double s = (r < 0.0) ? q : 1.0 - q;
  s = std::sqrt(-std::log(s));
  double x;
  if (s <= 5.0) {
    s -= 1.6;
    const double num =
        ((((((7.74545014278341407640e-4 * s + 2.27238449892691845833e-2) * s +
             2.41780725177450611770e-1) * s + 1.27045825245236838258e+0) * s +
           3.64784832476320460504e+0) * s + 5.76949722146069140550e+0) * s +
         4.63033784615654529590e+0) * s + 1.42343711074968357734e+0;
    const double den =
        ((((((1.05075007164441684324e-9 * s + 5.47593808499534494600e-4) * s +
             1.51986665636164571966e-2) * s + 1.48103976427480074590e-1) * s +
           6.89767334985100004550e-1) * s + 1.67638483018380384940e+0) * s +
         2.05319162663775882187e+0) * s + 1.0;
    x = num / den;
  } else {
    s -= 5.0;
    const double num =
        ((((((2.01033439929228813265e-7 * s + 2.71155556874348757815e-5) * s +
             1.24266094738807843860e-3) * s + 2.65321895265761230930e-2) * s +
           2.96560571828504891230e-1) * s + 1.78482653991729133580e+0) * s +
         5.46378491116411436990e+0) * s + 6.65790464350110377720e+0;
    const double den =
        ((((((2.04426310338993978564e-15 * s + 1.42151175831644588870e-7) * s +
             1.84631831751005468180e-5) * s + 7.86869131145613259100e-4) * s +
           1.48753612908506148525e-2) * s + 1.36929880922735805310e-1) * s +
         5.99832206555887937690e-1) * s + 1.0;
    x = num / den;
  }
  return (r < 0.0) ? -x : x;
}

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

// Regularized lower incomplete gamma P(a, x) by power series (x < a+1) or
// continued fraction for the complement (x >= a+1).
double regularized_gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double log_prefactor = a * std::log(x) - x - std::lgamma(a);

  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    double denom = a;
    for (int i = 0; i < 500; ++i) {
      denom += 1.0;
      term *= x / denom;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16)
        return std::min(1.0, sum * std::exp(log_prefactor));
    }
    throw InternalError("incomplete gamma series failed to converge");
  }

  // Modified Lentz continued fraction for Q(a, x).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16)
      return std::max(0.0, 1.0 - h * std::exp(log_prefactor));
  }
  throw InternalError("incomplete gamma continued fraction failed to converge");
}

}  // namespace

double std_normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw InputError("normal quantile needs 0 < q < 1, got " + std::to_string(q));
  double x = normal_quantile_rational(q);
  // One Newton step against the erfc-based CDF; skipped where the density
  // underflows (|x| > ~38), where the rational result is already as good as
  // doubles allow.
  const double pdf = kInvSqrt2Pi * std::exp(-0.5 * x * x);
  if (pdf > 1e-300) x -= (std_normal_cdf(x) - q) / pdf;
  return x;
}

double chi2_cdf(double x, double df) {
  if (!(df > 0.0)) throw InputError("chi2_cdf needs df > 0");
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(0.5 * df, 0.5 * x);
}

double chi2_quantile(double df, double q) {
  if (!(df >= 1.0)) throw InputError("chi2_quantile needs df >= 1, got " + std::to_string(df));
  if (!(q > 0.0 && q < 1.0))
    throw InputError("chi2_quantile needs 0 < q < 1, got " + std::to_string(q));

  // Wilson-Hilferty starting point, then bracketed Newton on the CDF.
  const double z = std_normal_quantile(q);
  const double wh_core = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  double x = (wh_core > 0.0) ? df * wh_core * wh_core * wh_core : df * 1e-4;
  if (!(x > 0.0)) x = 1e-8;

  double lo = 0.0;
  double hi = std::max(x, df);
  while (chi2_cdf(hi, df) < q) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw InternalError("chi2_quantile bracket expansion ran away");
  }
  if (x <= lo || x >= hi) x = 0.5 * (lo + hi);

  const double a = 0.5 * df;
  const double log_norm = -a * 0.69314718055994530942 - std::lgamma(a);  // -a ln 2 - ln G(a)
  for (int iter = 0; iter < 100; ++iter) {
    const double f = chi2_cdf(x, df) - q;
    if (f > 0.0) hi = x; else lo = x;
    const double log_pdf = (a - 1.0) * std::log(x) - 0.5 * x + log_norm;
    double step_x;
    if (log_pdf > -700.0) {
      step_x = x - f / std::exp(log_pdf);
    } else {
      step_x = 0.5 * (lo + hi);  // density underflowed: bisect
    }
    if (!(step_x > lo && step_x < hi)) step_x = 0.5 * (lo + hi);
    const double dx = std::abs(step_x - x);
    x = step_x;
    if (dx <= 1e-12 * (1.0 + x)) break;
  }
  return x;
}

double critical_value(const NormalApprox& approx, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw InputError("alpha must be in (0, 1), got " + std::to_string(alpha));
  if (approx.sigma2 <= 0.0)
    throw InputError("degenerate null: sigma2 = 0 (all probability in one category), "
                     "no critical value exists");
  return approx.mu + std_normal_quantile(1.0 - alpha) * std::sqrt(approx.sigma2);
}

}  // namespace ordanova
