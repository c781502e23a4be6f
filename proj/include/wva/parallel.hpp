#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wva::par {

// Execution mode for the data-parallel kernels. The serial path performs
// the same chunked arithmetic in the same order, so results are bitwise
// identical between modes and across thread counts.
enum class ExecMode { serial, openmp };

ExecMode mode();
void set_mode(ExecMode m);
bool openmp_available();
int max_threads();

// Fixed reduction chunk: partial sums are formed per chunk (chunk layout is
// independent of the thread count) and accumulated in chunk order.
inline constexpr std::size_t kReductionChunk = 4096;

// Parallelize only at the outermost kernel; nested regions would pay the
// team setup without gaining threads.
inline bool use_openmp() {
#ifdef _OPENMP
  return mode() == ExecMode::openmp && omp_in_parallel() == 0;
#else
  return false;
#endif
}

/// Deterministic indexed reduction: sum of term(i) for i in [0, n).
template <class Term>
double indexed_sum(std::size_t n, Term&& term) {
  if (n == 0) return 0.0;
  const std::size_t n_chunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partial(n_chunks, 0.0);
  const bool par = use_openmp();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n_chunks); ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t end = begin + kReductionChunk < n ? begin + kReductionChunk : n;
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  (void)par;
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

/// Deterministic symmetric-pair reduction over an array of length n:
/// sum of [term(i) + term(n-1-i)] for the first half, plus the middle
/// element when n is odd. Exactly cancels antisymmetric integrands
/// (term(i) == -term(n-1-i)) pair by pair, which plain left-to-right
/// accumulation does not.
template <class Term>
double mirrored_sum(std::size_t n, Term&& term) {
  if (n == 0) return 0.0;
  const std::size_t half = n / 2;
  double total = indexed_sum(half, [&](std::size_t i) { return term(i) + term(n - 1 - i); });
  if (n % 2 != 0) total += term(half);
  return total;
}

/// Deterministic element-wise loop: body(i) must write only to slot i of
/// its outputs. Iteration partitioning never affects results.
template <class Body>
void for_each_index(std::size_t n, Body&& body) {
  const bool par = use_openmp();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
  (void)par;
}

}  // namespace wva::par
