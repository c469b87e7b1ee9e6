#include "ordanova/kernels.hpp"

#include "kernels_internal.hpp"
#include "ordanova/errors.hpp"

namespace ordanova::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(ORDANOVA_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

const Kernel& select_kernel(Choice choice) {
  switch (choice) {
    case Choice::scalar:
      return scalar_kernel();
    case Choice::avx2:
#if defined(ORDANOVA_HAVE_AVX2)
      if (cpu_has_avx2()) return avx2_kernel();
      throw InputError("avx2 kernel requested but this CPU does not support AVX2");
#else
      throw InputError("avx2 kernel requested but this build has no AVX2 variant");
#endif
    case Choice::neon:
#if defined(ORDANOVA_HAVE_NEON)
      return neon_kernel();
#else
      throw InputError("neon kernel requested but this build has no NEON variant");
#endif
    case Choice::automatic:
      break;
  }
#if defined(ORDANOVA_HAVE_AVX2)
  if (cpu_has_avx2()) return avx2_kernel();
#endif
#if defined(ORDANOVA_HAVE_NEON)
  return neon_kernel();
#else
  return scalar_kernel();
#endif
}

std::vector<const Kernel*> available_kernels() {
  std::vector<const Kernel*> out{&scalar_kernel()};
#if defined(ORDANOVA_HAVE_AVX2)
  if (cpu_has_avx2()) out.push_back(&avx2_kernel());
#endif
#if defined(ORDANOVA_HAVE_NEON)
  out.push_back(&neon_kernel());
#endif
  return out;
}

Choice parse_choice(const std::string& name) {
  if (name == "auto") return Choice::automatic;
  if (name == "scalar") return Choice::scalar;
  if (name == "avx2") return Choice::avx2;
  if (name == "neon") return Choice::neon;
  throw InputError("unknown kernel '" + name + "' (expected auto, scalar, avx2, or neon)");
}

}  // namespace ordanova::kernels
