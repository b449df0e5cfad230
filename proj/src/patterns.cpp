#include "qai/patterns.hpp"

#include <bit>
#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include "qai/encoding.hpp"
#include "qai/error.hpp"

namespace qai::patterns {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNormTolerance = 1e-9;

int width_of(std::size_t length, const char* what) {
  if (length < 2 || !std::has_single_bit(length)) {
    throw NormalizationError(std::string(what) + " length " + std::to_string(length) +
                             " is not a power of two >= 2");
  }
  return std::countr_zero(length);
}

double norm_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

WeightSpec WeightSpec::from_weights(std::span<const double> weights) {
  width_of(weights.size(), "weight vector");
  const double norm = norm_of(weights);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NormalizationError("weight vector has zero or non-finite norm");
  }
  return from_weights(weights, 1.0 / norm);
}

WeightSpec WeightSpec::from_weights(std::span<const double> weights, double factor) {
  width_of(weights.size(), "weight vector");
  WeightSpec spec;
  spec.common_factor = factor;
  spec.amplitudes.resize(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) spec.amplitudes[k] = factor * weights[k];
  const double norm = norm_of(spec.amplitudes);
  if (std::abs(norm * norm - 1.0) > kNormTolerance) {
    throw NormalizationError("factor * weights has squared norm " +
                             std::to_string(norm * norm) + ", expected 1");
  }
  return spec;
}

int WeightSpec::width() const { return width_of(amplitudes.size(), "weight vector"); }

sim::Circuit prepare_amplitudes(std::span<const Complex> target) {
  const int width = width_of(target.size(), "target");
  double norm2 = 0.0;
  for (const Complex& a : target) norm2 += std::norm(a);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTolerance) {
    throw NormalizationError("target has squared norm " + std::to_string(norm2) +
                             ", expected 1");
  }
  const double scale = 1.0 / std::sqrt(norm2);

  // U = e^{i phi} (I - 2 w w^dag), w ~ e_0 - e^{-i phi} psi, phi = arg psi_0.
  // (I - 2 w w^dag) e_0 = e^{-i phi} psi since that vector has a real,
  // non-negative first entry.
  const double phi = std::abs(target[0]) > 0.0 ? std::arg(target[0]) : 0.0;
  const Complex unphase = std::polar(scale, -phi);
  std::vector<Complex> axis(target.size());
  for (std::size_t k = 0; k < target.size(); ++k) axis[k] = -unphase * target[k];
  axis[0] += 1.0;
  double axis_norm2 = 0.0;
  for (const Complex& a : axis) axis_norm2 += std::norm(a);
  if (axis_norm2 < 1e-24) {
    // Target is e^{i phi}|0>: reflect an orthogonal axis instead.
    std::fill(axis.begin(), axis.end(), Complex{0.0, 0.0});
    axis[1] = 1.0;
  } else {
    const double inv = 1.0 / std::sqrt(axis_norm2);
    for (Complex& a : axis) a *= inv;
  }
  sim::Circuit c(width);
  c.append(sim::Reflection{{0, width}, std::move(axis), std::polar(1.0, phi)});
  return c;
}

sim::Circuit prepare_amplitudes(std::span<const double> target) {
  std::vector<Complex> z(target.begin(), target.end());
  return prepare_amplitudes(std::span<const Complex>(z));
}

std::vector<double> nu2_amplitudes(int width) {
  const std::size_t m = std::size_t{1} << width;
  std::vector<double> a(m);
  for (std::size_t k = 0; k < m; ++k) a[k] = nu2_value(width, double(k));
  return a;
}

double nu2_value(int width, double t) {
  const double m = double(std::size_t{1} << width);
  const double s = std::sin(t * kPi / m);
  return std::sqrt(8.0 / (3.0 * m)) * s * s;
}

double lambda_normalization(int width) {
  const double m = double(std::size_t{1} << width);
  return std::sqrt((m - 1.0) * m * (2.0 * m - 1.0) / 6.0);
}

std::vector<double> lambda_amplitudes(int width) {
  const std::size_t m = std::size_t{1} << width;
  std::vector<double> a(m);
  for (std::size_t k = 0; k < m; ++k) a[k] = lambda_value(width, double(k));
  return a;
}

double lambda_value(int width, double t) { return t / lambda_normalization(width); }

sim::Circuit prepare_nu2(int width) {
  const auto a = nu2_amplitudes(width);
  return prepare_amplitudes(std::span<const double>(a));
}

sim::Circuit prepare_lambda(int width) {
  const auto a = lambda_amplitudes(width);
  return prepare_amplitudes(std::span<const double>(a));
}

InterpolationResult quantum_interpolate(const sim::Circuit& a, double t,
                                        EncodingDomain domain) {
  const int m = a.num_qubits();
  const std::size_t modulus = std::size_t{1} << m;

  sim::StateVector state = encoding::build_D(m, t, domain).run_from_zero();
  a.adjoint().apply(state);

  InterpolationResult r;
  const Complex amp = state.amplitude(0);
  r.quantum_value = amp.real();
  r.quantum_imag = amp.imag();

  const sim::StateVector encoded = a.run_from_zero();
  const auto row = kernels::fejer_row({modulus, t, domain});
  Complex sum = 0.0;
  for (std::size_t k = 0; k < modulus; ++k) sum += std::conj(encoded.amplitude(k)) * row[k];
  r.classical_value = sum.real();
  return r;
}

Complex inner_product_amplitude(const WeightSpec& a_weights,
                                const dictionary::BinaryPolynomial& poly,
                                const WeightSpec& b_weights, EncodingDomain domain) {
  const sim::RegisterLayout layout{a_weights.width(), b_weights.width()};
  const int q = layout.num_qubits();

  sim::Circuit c(q);
  c.append(prepare_amplitudes(std::span<const double>(a_weights.amplitudes))
               .embedded(q, layout.key().offset));
  c.append(dictionary::build_F(layout, poly, {domain, true, false}));
  c.append(sim::HadamardLayer{layout.key()});
  c.append(prepare_amplitudes(std::span<const double>(b_weights.amplitudes))
               .adjoint()
               .embedded(q, layout.value().offset));
  return c.run_from_zero().amplitude(0);
}

double generalized_inner_product(const WeightSpec& a_weights,
                                 const dictionary::BinaryPolynomial& poly,
                                 const WeightSpec& b_weights, EncodingDomain domain) {
  const Complex e = inner_product_amplitude(a_weights, poly, b_weights, domain);
  if (std::abs(e.imag()) > 1e-8) {
    std::cerr << "warning: inner product amplitude has imaginary part " << e.imag()
              << "; phase correction is not removing all phases\n";
  }
  return e.real();
}

double kernel_double_sum(const WeightSpec& a_weights,
                         const dictionary::BinaryPolynomial& poly,
                         const WeightSpec& b_weights, EncodingDomain domain) {
  const std::size_t n = a_weights.size();
  const std::size_t m = b_weights.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto row = kernels::fejer_row({m, poly.evaluate(k), domain});
    double inner = 0.0;
    for (std::size_t v = 0; v < m; ++v) inner += b_weights.amplitudes[v] * row[v];
    total += a_weights.amplitudes[k] * inner;
  }
  return total / std::sqrt(double(n));
}

WeightedSumResult weighted_sum(std::span<const double> weights,
                               const dictionary::BinaryPolynomial& poly,
                               std::span<const double> hash, double scale_a,
                               double scale_b, EncodingDomain domain,
                               double coefficient_scale) {
  const WeightSpec a = WeightSpec::from_weights(weights, scale_a);
  const WeightSpec b = WeightSpec::from_weights(hash, scale_b);
  const auto encoded = coefficient_scale == 1.0 ? poly : poly.scaled(coefficient_scale);
  WeightedSumResult r;
  r.amplitude = generalized_inner_product(a, encoded, b, domain);
  r.estimate = std::sqrt(double(weights.size())) / (scale_a * scale_b) * r.amplitude /
               coefficient_scale;
  return r;
}

WeightedSumResult expected_value(std::span<const double> weights,
                                 const dictionary::BinaryPolynomial& poly,
                                 int key_width, int value_width,
                                 double coefficient_scale) {
  if (weights.size() != (std::size_t{1} << key_width)) {
    throw LayoutError("expected " + std::to_string(std::size_t{1} << key_width) +
                      " weights, got " + std::to_string(weights.size()));
  }
  const std::size_t m = std::size_t{1} << value_width;
  std::vector<double> identity(m);
  for (std::size_t v = 0; v < m; ++v) identity[v] = double(v);
  const double scale_a = 1.0 / norm_of(weights);
  const double scale_b = 1.0 / lambda_normalization(value_width);
  return weighted_sum(weights, poly, identity, scale_a, scale_b,
                      EncodingDomain::kUnsigned, coefficient_scale);
}

double direct_weighted_sum(std::span<const double> weights,
                           const dictionary::BinaryPolynomial& poly,
                           const std::function<double(double)>& hash) {
  double sum = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) sum += weights[k] * hash(poly.evaluate(k));
  return sum;
}

}  // namespace qai::patterns
