#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qai/sim/gates.hpp"
#include "qai/sim/state_vector.hpp"

namespace qai::sim {

// H on every qubit of the register.
struct HadamardLayer {
  Register reg;
};

// U_gamma(theta): register-local basis state |k> gains e^{i k theta}, optionally
// conditioned on every qubit in `controls` (a global qubit mask) being set.
struct PhaseLadder {
  Register reg;
  double theta = 0.0;
  std::uint64_t controls = 0;
};

// Gate-level (inverse) quantum Fourier transform including the final
// bit-reversal swaps. Forward: y_j = W^{-1/2} sum_k x_k e^{+i 2 pi j k / W}.
struct Qft {
  Register reg;
  bool inverse = false;
};

// e^{i angle} on the subspace where every qubit in `controls` is set.
struct SubspacePhase {
  std::uint64_t controls = 0;
  double angle = 0.0;
};

// Register-local diagonal: |k> gains e^{i phases[k]}.
struct DiagonalPhase {
  Register reg;
  std::vector<double> phases;
};

// phase * (I - 2 axis axis^dag) on the register. Maps |0> to a chosen target
// when built by the amplitude loader; `axis` is a unit vector.
struct Reflection {
  Register reg;
  std::vector<Complex> axis;
  Complex phase{1.0, 0.0};
};

using Gate = std::variant<HadamardLayer, PhaseLadder, Qft, SubspacePhase,
                          DiagonalPhase, Reflection>;

std::string gate_name(const Gate& gate);

// An operator description: an ordered gate list over a fixed qubit count.
// Value-like; appending validates the gate against the qubit count.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  Circuit& append(Gate gate);
  Circuit& append(const Circuit& other);

  // Gates reversed, each conjugate-transposed.
  Circuit adjoint() const;

  // This circuit placed on qubits [offset, offset + num_qubits()) of a wider
  // register of `total_qubits`.
  Circuit embedded(int total_qubits, int offset) const;

  void apply(StateVector& state, Backend backend = Backend::kParallel) const;
  StateVector run_from_zero(Backend backend = Backend::kParallel) const;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

void apply_gate(StateVector& state, const Gate& gate,
                Backend backend = Backend::kParallel);
Gate adjoint(const Gate& gate);

// Free-function forms of the primitive operations.
void apply_hadamard_layer(StateVector& state, Register reg);
void apply_phase_ladder(StateVector& state, Register reg, double theta,
                        std::uint64_t controls = 0);
void apply_qft(StateVector& state, Register reg);
void apply_qft_inverse(StateVector& state, Register reg);
void apply_diagonal_phase(StateVector& state,
                          const std::function<double(std::size_t)>& phase_fn);
void apply_circuit(StateVector& state, const Circuit& circuit);
void apply_adjoint(StateVector& state, const Circuit& circuit);

}  // namespace qai::sim
