#pragma once

// Classical reference computations: the Fejer interpolation kernel, uniform
// sample reconstruction, the unitary DFT and Fourier coefficient extraction.
// Nothing here touches the simulator; quantum results are checked against it.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qai/sim/state_vector.hpp"

namespace qai::kernels {

// V_M = [0, M) for kUnsigned, [-M/2, M/2) for kTwosComplement.
enum class EncodingDomain { kUnsigned, kTwosComplement };

// Below this distance from the nearest integer a target counts as an integer.
inline constexpr double kIntegerTolerance = 1e-12;

bool is_integer(double t);

// Lower and upper bound of V_M.
double domain_lower(EncodingDomain domain, std::size_t modulus);
double domain_upper(EncodingDomain domain, std::size_t modulus);

// Maps t in V_M onto [0, M): unchanged for unsigned, t + M for negative
// Two's Complement values. Throws DomainError when t is outside V_M.
double normalize_to_domain(double t, EncodingDomain domain, std::size_t modulus);

// normalize_to_domain, with integer targets snapped to round(t) mod M.
double canonical_target(double t, EncodingDomain domain, std::size_t modulus);

struct FejerKernelSpec {
  std::size_t modulus = 0;  // M = 2^m
  double target = 0.0;      // t in V_M
  EncodingDomain domain = EncodingDomain::kUnsigned;
};

// c_{M,t}(k): 1 / 0 for integer t, otherwise
// (1/M) sin(pi (t - k)) / sin(pi (t - k) / M), with t normalized to [0, M).
double fejer_kernel(const FejerKernelSpec& spec, std::size_t k);

// Same kernel for an already normalized t in [0, M).
double fejer_kernel(std::size_t modulus, double normalized_t, std::size_t k);

// The whole row c_{M,t}(0..M-1).
std::vector<double> fejer_row(const FejerKernelSpec& spec);

// x_k = f(k T / N), k = 0..N-1.
class SampledSignal {
 public:
  SampledSignal(std::vector<double> samples, double interval_length);

  const std::vector<double>& samples() const { return samples_; }
  double interval_length() const { return interval_length_; }
  std::size_t size() const { return samples_.size(); }
  double spacing() const { return interval_length_ / double(samples_.size()); }

 private:
  std::vector<double> samples_;
  double interval_length_;
};

// Band-limited reconstruction at t in [0, T): the periodic trigonometric
// interpolant through the samples. For odd N this is
//   (1/N) sum_k x_k sin(pi u_k / h) / sin(pi u_k / T),  u_k = t - k h, h = T/N;
// for even N the sine in the denominator is replaced by a tangent, which keeps
// the kernel T-periodic and reproduces every frequency below N/2 exactly.
double classical_interpolate(const SampledSignal& signal, double t);

// The sin/sin sum above taken literally for any N. For T = N this equals
// sum_k x_k c_{N,t}(k), i.e. what an amplitude inner product with a Fejer
// state computes.
double dirichlet_interpolate(const SampledSignal& signal, double t);

// Unitary DFT: y_j = N^{-1/2} sum_k x_k e^{-i 2 pi j k / N}.
std::vector<Complex> dft(std::span<const Complex> x);
std::vector<Complex> dft(std::span<const double> x);

// Row-major N x N matrix of the transform above.
std::vector<Complex> dft_matrix(std::size_t n);

// Fourier coefficients z_{-L..L}; coefficients[l + L] holds z_l.
struct FourierSpectrum {
  std::vector<Complex> coefficients;
  int band_limit = 0;

  Complex at(int l) const { return coefficients.at(std::size_t(l + band_limit)); }
  // sum_l z_l e^{i 2 pi l t / T}
  Complex evaluate(double t, double interval_length) const;
};

// z_l = y_{l mod N} / sqrt(N), bins above N/2 read as negative frequencies.
// Throws UndersampledError when N < 2L + 1.
FourierSpectrum fourier_coefficients(const SampledSignal& signal, int band_limit);

}  // namespace qai::kernels
