#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qai {

using Complex = std::complex<double>;

namespace sim {

// A contiguous run of qubits [offset, offset + width). Register-local qubit 0
// is the least significant bit of the register-local basis index.
struct Register {
  int offset = 0;
  int width = 0;

  std::size_t dimension() const { return std::size_t{1} << width; }
  std::uint64_t mask() const {
    return ((std::uint64_t{1} << width) - 1) << offset;
  }
  std::size_t local_index(std::size_t index) const {
    return (index >> offset) & (dimension() - 1);
  }
  bool overlaps(std::uint64_t qubit_mask) const {
    return (mask() & qubit_mask) != 0;
  }

  friend bool operator==(const Register&, const Register&) = default;
};

// Key register of n qubits and value register of m qubits. The value register
// occupies the low qubits, so a combined basis index is key * M + value and
// the amplitudes of one key form a contiguous block.
struct RegisterLayout {
  int key_width = 0;
  int value_width = 0;

  int num_qubits() const { return key_width + value_width; }
  Register key() const { return {value_width, key_width}; }
  Register value() const { return {0, value_width}; }
  std::size_t key_dimension() const { return std::size_t{1} << key_width; }
  std::size_t value_dimension() const { return std::size_t{1} << value_width; }

  std::size_t combine(std::size_t key, std::size_t value) const {
    return (key << value_width) | value;
  }
  std::pair<std::size_t, std::size_t> split(std::size_t index) const {
    return {index >> value_width, index & (value_dimension() - 1)};
  }
  // Global qubit mask for key-register-local qubit indices.
  std::uint64_t key_qubit_mask(std::uint64_t key_local_mask) const {
    return key_local_mask << value_width;
  }
};

struct BasisOutcome {
  std::size_t index = 0;
  Complex amplitude;
  double probability = 0.0;
};

// Dense amplitude vector over 2^q basis states.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;

  // |0...0> on num_qubits qubits. Throws CapacityError outside [1, kMaxQubits].
  explicit StateVector(int num_qubits);

  // Takes ownership of amplitudes; the length must be a power of two. The
  // vector is stored as given (no renormalization).
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() { return amplitudes_; }

  Complex amplitude(std::size_t index) const;
  BasisOutcome outcome(std::size_t index) const;
  std::vector<double> probabilities() const;
  double norm_squared() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(int num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

StateVector new_zero_state(int num_qubits);

Complex amplitude_of(const StateVector& state, std::size_t index);
std::vector<double> probabilities(const StateVector& state);

// Inner product <a|b>, summed in index order.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace sim
}  // namespace qai
