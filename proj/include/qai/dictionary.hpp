#pragma once

// Quantum multi-value dictionaries: a function on {0..N-1} written as a
// polynomial of binary variables, and the operators F and F' that entangle a
// key register with the encoding of each function value.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qai/kernels.hpp"
#include "qai/sim/circuit.hpp"
#include "qai/sim/state_vector.hpp"

namespace qai::dictionary {

using kernels::EncodingDomain;

// p(x_0..x_{n-1}) = sum_J c_J prod_{j in J} x_j. A subset J is a bitmask; bit
// j of the key index is variable x_j.
class BinaryPolynomial {
 public:
  explicit BinaryPolynomial(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::map<std::uint64_t, double>& terms() const { return terms_; }

  // Adds c to the coefficient of the monomial over `subset`.
  BinaryPolynomial& add_term(std::uint64_t subset, double coefficient);

  double coefficient(std::uint64_t subset) const;

  // sum of c_J over J contained in the set bits of k.
  double evaluate(std::uint64_t k) const;

  // evaluate(k) for k = 0..2^n - 1.
  std::vector<double> table() const;

  // Every coefficient multiplied by s.
  BinaryPolynomial scaled(double s) const;

  // Variable j renamed to n-1-j.
  BinaryPolynomial with_reversed_variables() const;

 private:
  int num_vars_;
  std::map<std::uint64_t, double> terms_;
};

// Mobius transform over the subset lattice. Throws RangeError when the length
// is not a power of two. Coefficients below 1e-13 relative to the table's
// magnitude are dropped.
BinaryPolynomial polynomial_from_table(std::span<const double> values);

// How variable names in text map onto key bits. kMsbFirst reads k0 as the
// most significant key bit.
enum class VariableOrder { kLsbFirst, kMsbFirst };

// One term per line or per ';'-separated item: `<real>: <term>`, where term is
// `1` or `*`-joined variables `k<i>`. `#` starts a comment.
BinaryPolynomial parse_polynomial(std::string_view text, int num_vars,
                                  VariableOrder order = VariableOrder::kLsbFirst);

std::string format_polynomial(const BinaryPolynomial& poly);

// A function value is admissible when it lies in V_M and, if not an
// integer, its two nearest integers both lie in V_M.
bool value_admissible(double value, EncodingDomain domain, std::size_t modulus);

// Throws RangeError naming the first key whose value is not admissible.
void check_range(const BinaryPolynomial& poly, int value_width,
                 EncodingDomain domain);

struct DictionaryState {
  sim::RegisterLayout layout;
  sim::StateVector state;

  double key_probability(std::size_t key) const;
  // Value-register amplitudes at `key`, renormalized to unit length.
  std::vector<Complex> value_slice(std::size_t key) const;
};

struct DictionaryOptions {
  EncodingDomain domain = EncodingDomain::kUnsigned;
  bool phase_correct = false;  // F' instead of F
  bool prepare_keys = true;    // H on the key register first
};

// Operator F (or F') on layout.num_qubits() qubits.
sim::Circuit build_F(const sim::RegisterLayout& layout,
                     const BinaryPolynomial& poly, const DictionaryOptions& opts);

// Applies F to `state`, which must be |0>_{n+m} (keys are then put in equal
// superposition) or have the value register in |0>.
DictionaryState apply_F(sim::StateVector state, const sim::RegisterLayout& layout,
                        const BinaryPolynomial& poly,
                        EncodingDomain domain = EncodingDomain::kUnsigned);

DictionaryState apply_F_prime(sim::StateVector state,
                              const sim::RegisterLayout& layout,
                              const BinaryPolynomial& poly,
                              EncodingDomain domain = EncodingDomain::kUnsigned);

}  // namespace qai::dictionary
