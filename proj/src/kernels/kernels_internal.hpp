#pragma once

#include "ordanova/kernels.hpp"

// Internal registry of kernel variants.  Declarations are unconditional;
// only the variants enabled by the build (ORDANOVA_HAVE_AVX2 / _NEON) have
// definitions, and dispatch.cpp references them under the same guards.

namespace ordanova::kernels {

const Kernel& scalar_kernel();
const Kernel& avx2_kernel();
const Kernel& neon_kernel();

}  // namespace ordanova::kernels
