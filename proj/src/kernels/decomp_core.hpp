#pragma once

#include <cstddef>
#include <vector>

// Shared arithmetic core of the batched variation decomposition.  The same
// function template is instantiated once per pack type (plain double, AVX2
// __m256d, NEON float64x2_t); because every kernel runs the identical
// expression tree, each lane performs the same IEEE-754 operation sequence
// and scalar/SIMD results are required to match bit for bit.  Keep this
// free of any construct a compiler could contract or reorder per target
// (no fused multiply-adds, no reductions across lanes).

namespace ordanova::kernels::detail {

template <class Pack>
void decompose_batch_impl(const double* counts, std::size_t labs, std::size_t categories,
                          double replicates, double* h2_total, double* h2_within,
                          double* s2_between) {
  constexpr std::size_t W = Pack::width;
  const std::size_t boundaries = categories - 1;
  const Pack n = Pack::broadcast(replicates);
  const Pack m_count = Pack::broadcast(static_cast<double>(labs));
  const Pack one = Pack::broadcast(1.0);
  const Pack scale = Pack::broadcast(4.0 / static_cast<double>(boundaries));

  // Per-lab cumulative fractions for the first K-1 boundaries.
  thread_local std::vector<Pack> fhat;
  fhat.resize(labs * boundaries, Pack::broadcast(0.0));
  for (std::size_t m = 0; m < labs; ++m) {
    Pack cum = Pack::broadcast(0.0);
    for (std::size_t k = 0; k < boundaries; ++k) {
      cum = cum + Pack::load(counts + (m * categories + k) * W);
      fhat[m * boundaries + k] = cum / n;
    }
  }

  Pack within = Pack::broadcast(0.0);
  for (std::size_t m = 0; m < labs; ++m)
    for (std::size_t k = 0; k < boundaries; ++k) {
      const Pack f = fhat[m * boundaries + k];
      within = within + f * (one - f);
    }
  within = scale * (within / m_count);

  Pack total = Pack::broadcast(0.0);
  Pack between = Pack::broadcast(0.0);
  for (std::size_t k = 0; k < boundaries; ++k) {
    Pack fbar = Pack::broadcast(0.0);
    for (std::size_t m = 0; m < labs; ++m) fbar = fbar + fhat[m * boundaries + k];
    fbar = fbar / m_count;
    total = total + fbar * (one - fbar);
    Pack dev_sq = Pack::broadcast(0.0);
    for (std::size_t m = 0; m < labs; ++m) {
      const Pack dev = fhat[m * boundaries + k] - fbar;
      dev_sq = dev_sq + dev * dev;
    }
    between = between + dev_sq / m_count;
  }
  total = scale * total;
  between = scale * between;

  total.store(h2_total);
  within.store(h2_within);
  between.store(s2_between);
}

}  // namespace ordanova::kernels::detail
