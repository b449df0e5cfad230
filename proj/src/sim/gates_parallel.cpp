#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qai/sim/gates.hpp"

namespace qai::sim::parallel {

namespace {

// Below this many loop iterations the fork/join cost dominates.
constexpr std::int64_t kMinParallelWork = std::int64_t{1} << 13;

// Chunk size for the norm reduction. Fixed, so the summation tree does not
// depend on the thread count.

inline std::size_t insert_zero_bit(std::size_t i, int qubit) {
  const std::size_t low = i & ((std::size_t{1} << qubit) - 1);
  return ((i >> qubit) << (qubit + 1)) | low;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void hadamard(std::span<Complex> amps, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (pairs >= kMinParallelWork)
  for (std::int64_t i = 0; i < pairs; ++i) {
    const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(i), qubit);
    const std::size_t i1 = i0 | bit;
    const Complex a = amps[i0];
    const Complex b = amps[i1];
    amps[i0] = (a + b) * M_SQRT1_2;
    amps[i1] = (a - b) * M_SQRT1_2;
  }
}

void subspace_phase(std::span<Complex> amps, std::uint64_t controls,
                    double angle) {
  const Complex factor = std::polar(1.0, angle);
  const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallelWork)
  for (std::int64_t i = 0; i < n; ++i) {
    if ((static_cast<std::uint64_t>(i) & controls) == controls) {
      amps[i] *= factor;
    }
  }
}

void swap_qubits(std::span<Complex> amps, int a, int b) {
  if (a == b) return;
  const std::size_t bit_a = std::size_t{1} << a;
  const std::size_t bit_b = std::size_t{1} << b;
  const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallelWork)
  for (std::int64_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    if ((i & bit_a) && !(i & bit_b)) {
      std::swap(amps[i], amps[(i & ~bit_a) | bit_b]);
    }
  }
}

void register_diagonal(std::span<Complex> amps, Register reg,
                       std::span<const Complex> factors,
                       std::uint64_t controls) {
  const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (n >= kMinParallelWork)
  for (std::int64_t s = 0; s < n; ++s) {
    const auto i = static_cast<std::size_t>(s);
    if ((i & controls) == controls) amps[i] *= factors[reg.local_index(i)];
  }
}

void reflect(std::span<Complex> amps, Register reg,
             std::span<const Complex> axis, Complex phase) {
  const std::size_t dim = reg.dimension();
  const auto outer = static_cast<std::int64_t>(amps.size() / dim);
  const std::size_t low_mask = (std::size_t{1} << reg.offset) - 1;
  // Slices are independent; each slice's dot product stays serial.
#pragma omp parallel for schedule(static) \
    if (outer > 1 && static_cast<std::int64_t>(amps.size()) >= kMinParallelWork)
  for (std::int64_t so = 0; so < outer; ++so) {
    const auto o = static_cast<std::size_t>(so);
    const std::size_t base =
        ((o >> reg.offset) << (reg.offset + reg.width)) | (o & low_mask);
    Complex dot = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      dot += std::conj(axis[k]) * amps[base | (k << reg.offset)];
    }
    for (std::size_t k = 0; k < dim; ++k) {
      Complex& x = amps[base | (k << reg.offset)];
      x = phase * (x - 2.0 * axis[k] * dot);
    }
  }
}

double norm_squared(std::span<const Complex> amps) {
  const std::size_t chunks = (amps.size() + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partial(chunks, 0.0);
  const auto nchunks = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static) if (nchunks > 1)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t end = std::min(begin + kReductionChunk, amps.size());
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += std::norm(amps[i]);
    partial[c] = sum;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace qai::sim::parallel
