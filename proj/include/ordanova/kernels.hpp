#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ordanova::kernels {

// Batched evaluation of the variation decomposition, the inner loop of the
// Monte Carlo engine.  A batch holds the count tables of `lanes` independent
// simulation replications, interleaved so that lane L of cell (m, k) sits at
//
//   counts[(m*categories + k)*lanes + L]
//
// and one call produces h2_total/h2_within/s2_between for every lane.  All
// kernels are generated from one shared expression template, so every lane
// performs the identical sequence of IEEE-754 operations and the scalar and
// SIMD variants agree bit for bit (verified by tests).
struct Kernel {
  const char* name;     // "scalar", "avx2", "neon"
  std::size_t lanes;    // batch width this kernel processes per call
  void (*decompose_batch)(const double* counts, std::size_t labs,
                          std::size_t categories, double replicates,
                          double* h2_total, double* h2_within, double* s2_between);
};

enum class Choice {
  automatic,  // best variant the build and the CPU support
  scalar,
  avx2,
  neon,
};

// Resolves a choice to a concrete kernel.  Throws InputError when a forced
// variant is not available (not compiled in, or the CPU lacks the feature).
const Kernel& select_kernel(Choice choice);

// Kernels usable on this machine, scalar first.
std::vector<const Kernel*> available_kernels();

// Parses "auto"/"scalar"/"avx2"/"neon"; throws InputError otherwise.
Choice parse_choice(const std::string& name);

}  // namespace ordanova::kernels
