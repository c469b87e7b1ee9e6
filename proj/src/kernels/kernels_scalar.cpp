#include "ordanova/kernels.hpp"

#include "kernels_internal.hpp"
#include "decomp_core.hpp"

namespace ordanova::kernels {

namespace {

struct ScalarPack {
  static constexpr std::size_t width = 1;
  double v;

  static ScalarPack broadcast(double x) { return {x}; }
  static ScalarPack load(const double* p) { return {*p}; }
  void store(double* p) const { *p = v; }

  friend ScalarPack operator+(ScalarPack a, ScalarPack b) { return {a.v + b.v}; }
  friend ScalarPack operator-(ScalarPack a, ScalarPack b) { return {a.v - b.v}; }
  friend ScalarPack operator*(ScalarPack a, ScalarPack b) { return {a.v * b.v}; }
  friend ScalarPack operator/(ScalarPack a, ScalarPack b) { return {a.v / b.v}; }
};

void decompose_batch(const double* counts, std::size_t labs, std::size_t categories,
                     double replicates, double* h2_total, double* h2_within,
                     double* s2_between) {
  detail::decompose_batch_impl<ScalarPack>(counts, labs, categories, replicates, h2_total,
                                           h2_within, s2_between);
}

}  // namespace

const Kernel& scalar_kernel() {
  static const Kernel k{"scalar", ScalarPack::width, decompose_batch};
  return k;
}

}  // namespace ordanova::kernels
