// NEON variant of the decomposition kernel: two replications per call.
// Built only on AArch64, where float64x2_t is always available.  As with
// AVX2, no fused operations: lanes must match the scalar kernel bit for bit
// (vmulq/vaddq are separate roundings; we never emit vfmaq).

#if defined(ORDANOVA_HAVE_NEON)

#include <arm_neon.h>

#include "ordanova/kernels.hpp"

#include "kernels_internal.hpp"
#include "decomp_core.hpp"

namespace ordanova::kernels {

namespace {

struct NeonPack {
  static constexpr std::size_t width = 2;
  float64x2_t v;

  static NeonPack broadcast(double x) { return {vdupq_n_f64(x)}; }
  static NeonPack load(const double* p) { return {vld1q_f64(p)}; }
  void store(double* p) const { vst1q_f64(p, v); }

  friend NeonPack operator+(NeonPack a, NeonPack b) { return {vaddq_f64(a.v, b.v)}; }
  friend NeonPack operator-(NeonPack a, NeonPack b) { return {vsubq_f64(a.v, b.v)}; }
  friend NeonPack operator*(NeonPack a, NeonPack b) { return {vmulq_f64(a.v, b.v)}; }
  friend NeonPack operator/(NeonPack a, NeonPack b) { return {vdivq_f64(a.v, b.v)}; }
};

void decompose_batch(const double* counts, std::size_t labs, std::size_t categories,
                     double replicates, double* h2_total, double* h2_within,
                     double* s2_between) {
  detail::decompose_batch_impl<NeonPack>(counts, labs, categories, replicates, h2_total,
                                         h2_within, s2_between);
}

}  // namespace

const Kernel& neon_kernel() {
  static const Kernel k{"neon", NeonPack::width, decompose_batch};
  return k;
}

}  // namespace ordanova::kernels

#endif  // ORDANOVA_HAVE_NEON
