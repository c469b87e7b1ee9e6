// AVX2 variant of the decomposition kernel: four replications per call.
// This file is compiled with -mavx2 (and nothing else is), so the pack type
// below is the only code in the library allowed to use these intrinsics.
// No FMA: lanes must match the scalar kernel bit for bit.

#if defined(ORDANOVA_HAVE_AVX2)

#include <immintrin.h>

#include "ordanova/kernels.hpp"

#include "kernels_internal.hpp"
#include "decomp_core.hpp"

namespace ordanova::kernels {

namespace {

struct Avx2Pack {
  static constexpr std::size_t width = 4;
  __m256d v;

  static Avx2Pack broadcast(double x) { return {_mm256_set1_pd(x)}; }
  static Avx2Pack load(const double* p) { return {_mm256_loadu_pd(p)}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }

  friend Avx2Pack operator+(Avx2Pack a, Avx2Pack b) { return {_mm256_add_pd(a.v, b.v)}; }
  friend Avx2Pack operator-(Avx2Pack a, Avx2Pack b) { return {_mm256_sub_pd(a.v, b.v)}; }
  friend Avx2Pack operator*(Avx2Pack a, Avx2Pack b) { return {_mm256_mul_pd(a.v, b.v)}; }
  friend Avx2Pack operator/(Avx2Pack a, Avx2Pack b) { return {_mm256_div_pd(a.v, b.v)}; }
};

void decompose_batch(const double* counts, std::size_t labs, std::size_t categories,
                     double replicates, double* h2_total, double* h2_within,
                     double* s2_between) {
  detail::decompose_batch_impl<Avx2Pack>(counts, labs, categories, replicates, h2_total,
                                         h2_within, s2_between);
}

}  // namespace

const Kernel& avx2_kernel() {
  static const Kernel k{"avx2", Avx2Pack::width, decompose_batch};
  return k;
}

}  // namespace ordanova::kernels

#endif  // ORDANOVA_HAVE_AVX2
