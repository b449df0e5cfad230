#pragma once

// Low-level amplitude kernels. Every kernel exists twice with identical
// signatures: `serial` is the plain-loop reference kept for testing, and
// `parallel` splits the same loop across OpenMP threads. Each output
// amplitude is produced by the same floating-point expression in both, so
// results are bit-identical regardless of thread count.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "qai/sim/state_vector.hpp"

namespace qai::sim {

enum class Backend { kSerial, kParallel };

// Both backends sum |a|^2 in chunks of this size, then add the partial sums
// in order, so norms agree bit for bit.
inline constexpr std::size_t kReductionChunk = std::size_t{1} << 12;

namespace serial {

void hadamard(std::span<Complex> amps, int qubit);

// Amplitudes whose index has every bit of `controls` set pick up e^{i angle}.
// controls == 0 is a global phase.
void subspace_phase(std::span<Complex> amps, std::uint64_t controls,
                    double angle);

void swap_qubits(std::span<Complex> amps, int a, int b);

// amps[i] *= factors[reg.local_index(i)] for every i with all controls set.
void register_diagonal(std::span<Complex> amps, Register reg,
                       std::span<const Complex> factors,
                       std::uint64_t controls);

// On every register slice x: x <- phase * (x - 2 axis (axis^dag x)).
// `axis` must be a unit vector of length reg.dimension().
void reflect(std::span<Complex> amps, Register reg,
             std::span<const Complex> axis, Complex phase);

double norm_squared(std::span<const Complex> amps);

}  // namespace serial

namespace parallel {

void hadamard(std::span<Complex> amps, int qubit);
void subspace_phase(std::span<Complex> amps, std::uint64_t controls,
                    double angle);
void swap_qubits(std::span<Complex> amps, int a, int b);
void register_diagonal(std::span<Complex> amps, Register reg,
                       std::span<const Complex> factors,
                       std::uint64_t controls);
void reflect(std::span<Complex> amps, Register reg,
             std::span<const Complex> axis, Complex phase);

// Partial sums over fixed-size chunks, combined in chunk order.
double norm_squared(std::span<const Complex> amps);

// 1 when built without OpenMP.
int max_threads();

}  // namespace parallel

}  // namespace qai::sim
