#include "qai/sim/state_vector.hpp"

#include <bit>
#include <string>

#include "qai/error.hpp"
#include "qai/sim/gates.hpp"

namespace qai::sim {

namespace {

void check_capacity(int num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(num_qubits) +
                        " outside [1, " +
                        std::to_string(StateVector::kMaxQubits) + "]");
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  check_capacity(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  if (amplitudes.size() < 2 || !std::has_single_bit(amplitudes.size())) {
    throw CapacityError("amplitude vector length " +
                        std::to_string(amplitudes.size()) +
                        " is not a power of two >= 2");
  }
  const int q = std::countr_zero(amplitudes.size());
  check_capacity(q);
  return StateVector(q, std::move(amplitudes));
}

Complex StateVector::amplitude(std::size_t index) const {
  if (index >= amplitudes_.size()) {
    throw IndexError("basis index " + std::to_string(index) +
                     " out of range for " + std::to_string(num_qubits_) +
                     " qubits");
  }
  return amplitudes_[index];
}

BasisOutcome StateVector::outcome(std::size_t index) const {
  const Complex a = amplitude(index);
  return {index, a, std::norm(a)};
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

double StateVector::norm_squared() const {
  return parallel::norm_squared(amplitudes_);
}

StateVector new_zero_state(int num_qubits) { return StateVector(num_qubits); }

Complex amplitude_of(const StateVector& state, std::size_t index) {
  return state.amplitude(index);
}

std::vector<double> probabilities(const StateVector& state) {
  return state.probabilities();
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw LayoutError("inner product of vectors with different lengths");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

}  // namespace qai::sim
