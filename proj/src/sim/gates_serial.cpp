#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qai/sim/gates.hpp"

namespace qai::sim::serial {

namespace {

// Index of the i-th basis state whose bit `qubit` is clear.
std::size_t insert_zero_bit(std::size_t i, int qubit) {
  const std::size_t low = i & ((std::size_t{1} << qubit) - 1);
  return ((i >> qubit) << (qubit + 1)) | low;
}

}  // namespace

void hadamard(std::span<Complex> amps, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  const std::size_t pairs = amps.size() / 2;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t i0 = insert_zero_bit(i, qubit);
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
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & controls) == controls) amps[i] *= factor;
  }
}

void swap_qubits(std::span<Complex> amps, int a, int b) {
  if (a == b) return;
  const std::size_t bit_a = std::size_t{1} << a;
  const std::size_t bit_b = std::size_t{1} << b;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    // Visit each (..1..0..) / (..0..1..) pair once, from the a-set side.
    if ((i & bit_a) && !(i & bit_b)) {
      std::swap(amps[i], amps[(i & ~bit_a) | bit_b]);
    }
  }
}

void register_diagonal(std::span<Complex> amps, Register reg,
                       std::span<const Complex> factors,
                       std::uint64_t controls) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & controls) == controls) amps[i] *= factors[reg.local_index(i)];
  }
}

void reflect(std::span<Complex> amps, Register reg,
             std::span<const Complex> axis, Complex phase) {
  const std::size_t dim = reg.dimension();
  const std::size_t outer = amps.size() / dim;
  const std::size_t low_mask = (std::size_t{1} << reg.offset) - 1;
  for (std::size_t o = 0; o < outer; ++o) {
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
  double total = 0.0;
  for (std::size_t begin = 0; begin < amps.size(); begin += kReductionChunk) {
    const std::size_t end = std::min(begin + kReductionChunk, amps.size());
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += std::norm(amps[i]);
    total += sum;
  }
  return total;
}

}  // namespace qai::sim::serial
