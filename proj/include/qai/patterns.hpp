#pragma once

// Amplitude interpolation and the generalized inner product built on it.
//
// quantum_interpolate:        <0| A^dag D_{m,t} |0> = sum_k f(k) c_{M,t}(k)
// generalized_inner_product:  <0| (H^n (x) B^dag) F' (A (x) I) |0>
//                             = N^{-1/2} sum_k a_k sum_v b_v c_{M,f(k)}(v)
//
// Amplitudes are read straight from the simulated statevector.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qai/dictionary.hpp"
#include "qai/kernels.hpp"
#include "qai/sim/circuit.hpp"

namespace qai::patterns {

using kernels::EncodingDomain;

// A normalized amplitude vector plus the factor relating it to raw weights:
// amplitudes[k] = common_factor * weight[k].
struct WeightSpec {
  std::vector<double> amplitudes;
  double common_factor = 1.0;

  // Factor chosen as 1 / ||weights||. Throws NormalizationError for a zero
  // vector or a length that is not a power of two >= 2.
  static WeightSpec from_weights(std::span<const double> weights);
  // Uses the given factor; factor * weights must be a unit vector (1e-9).
  static WeightSpec from_weights(std::span<const double> weights, double factor);

  std::size_t size() const { return amplitudes.size(); }
  int width() const;
};

// Exact loader: a unitary on log2(len) qubits whose action on |0> is the
// target (within rounding). Throws NormalizationError when ||target|| is not
// 1 within 1e-9.
sim::Circuit prepare_amplitudes(std::span<const Complex> target);
sim::Circuit prepare_amplitudes(std::span<const double> target);

// sqrt(8 / (3M)) sin^2(k pi / M)
std::vector<double> nu2_amplitudes(int width);
double nu2_value(int width, double t);
// k / sqrt(sum_{j<M} j^2)
std::vector<double> lambda_amplitudes(int width);
double lambda_value(int width, double t);
// sqrt(sum_{k=1}^{M-1} k^2) = sqrt((M-1) M (2M-1) / 6)
double lambda_normalization(int width);

sim::Circuit prepare_nu2(int width);
sim::Circuit prepare_lambda(int width);

struct InterpolationResult {
  double quantum_value = 0.0;
  double quantum_imag = 0.0;
  double classical_value = 0.0;
  std::optional<double> exact_value;
};

// A acts on m qubits. quantum_value is Re <0|A^dag D_{m,t}|0>; classical_value
// is sum_k conj(a_k) c_{M,t}(k) with a = A|0>.
InterpolationResult quantum_interpolate(const sim::Circuit& a, double t,
                                        EncodingDomain domain = EncodingDomain::kUnsigned);

// Full amplitude of |0>_{n+m} for the inner-product circuit. n and m come
// from the weight lengths.
Complex inner_product_amplitude(const WeightSpec& a_weights,
                                const dictionary::BinaryPolynomial& poly,
                                const WeightSpec& b_weights,
                                EncodingDomain domain = EncodingDomain::kUnsigned);

// Real part of inner_product_amplitude; warns on stderr when |Im| > 1e-8.
double generalized_inner_product(const WeightSpec& a_weights,
                                 const dictionary::BinaryPolynomial& poly,
                                 const WeightSpec& b_weights,
                                 EncodingDomain domain = EncodingDomain::kUnsigned);

// The same quantity from the kernel alone: N^{-1/2} sum_k a_k sum_v b_v c(v).
double kernel_double_sum(const WeightSpec& a_weights,
                         const dictionary::BinaryPolynomial& poly,
                         const WeightSpec& b_weights,
                         EncodingDomain domain = EncodingDomain::kUnsigned);

struct WeightedSumResult {
  double amplitude = 0.0;  // E_{|0>}
  double estimate = 0.0;   // sqrt(N) / (a b) E / coefficient_scale
};

// Estimates sum_k w_k h(f(k)). scale_a * w and scale_b * h must be unit
// vectors. With coefficient_scale s the polynomial is encoded as s * p (h is
// then read on the scaled values) and the estimate is divided by s.
WeightedSumResult weighted_sum(std::span<const double> weights,
                               const dictionary::BinaryPolynomial& poly,
                               std::span<const double> hash, double scale_a,
                               double scale_b,
                               EncodingDomain domain = EncodingDomain::kUnsigned,
                               double coefficient_scale = 1.0);

// sum_k w_k f(k) with B = L_m (h(v) = v) and a = 1 / ||w||.
WeightedSumResult expected_value(std::span<const double> weights,
                                 const dictionary::BinaryPolynomial& poly,
                                 int key_width, int value_width,
                                 double coefficient_scale = 1.0);

// sum_k w_k h(f(k)) evaluated directly.
double direct_weighted_sum(std::span<const double> weights,
                           const dictionary::BinaryPolynomial& poly,
                           const std::function<double(double)>& hash);

}  // namespace qai::patterns
