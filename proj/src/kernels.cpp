#include "qai/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qai/error.hpp"

namespace qai::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool is_integer(double t) { return std::abs(t - std::round(t)) < kIntegerTolerance; }

double domain_lower(EncodingDomain domain, std::size_t modulus) {
  return domain == EncodingDomain::kUnsigned ? 0.0 : -double(modulus) / 2.0;
}

double domain_upper(EncodingDomain domain, std::size_t modulus) {
  return domain == EncodingDomain::kUnsigned ? double(modulus)
                                             : double(modulus) / 2.0;
}

double normalize_to_domain(double t, EncodingDomain domain, std::size_t modulus) {
  const double lo = domain_lower(domain, modulus);
  const double hi = domain_upper(domain, modulus);
  if (!std::isfinite(t) || t < lo || t >= hi) {
    throw DomainError("value " + format(t) + " outside V_M = [" + format(lo) +
                      ", " + format(hi) + ")");
  }
  return t < 0.0 ? t + double(modulus) : t;
}

double canonical_target(double t, EncodingDomain domain, std::size_t modulus) {
  if (!is_integer(t)) return normalize_to_domain(t, domain, modulus);
  const double normalized = normalize_to_domain(std::round(t), domain, modulus);
  return double(std::size_t(std::llround(normalized)) % modulus);
}

double fejer_kernel(std::size_t modulus, double normalized_t, std::size_t k) {
  const double m = double(modulus);
  if (is_integer(normalized_t)) {
    const auto target = std::size_t(std::llround(normalized_t)) % modulus;
    return target == k ? 1.0 : 0.0;
  }
  const double d = normalized_t - double(k);
  return std::sin(kPi * d) / std::sin(kPi * d / m) / m;
}

double fejer_kernel(const FejerKernelSpec& spec, std::size_t k) {
  return fejer_kernel(spec.modulus,
                      normalize_to_domain(spec.target, spec.domain, spec.modulus), k);
}

std::vector<double> fejer_row(const FejerKernelSpec& spec) {
  const double t = normalize_to_domain(spec.target, spec.domain, spec.modulus);
  std::vector<double> row(spec.modulus);
  for (std::size_t k = 0; k < row.size(); ++k) row[k] = fejer_kernel(spec.modulus, t, k);
  return row;
}

SampledSignal::SampledSignal(std::vector<double> samples, double interval_length)
    : samples_(std::move(samples)), interval_length_(interval_length) {
  if (samples_.empty()) throw DomainError("a sampled signal needs at least one sample");
  if (!(interval_length_ > 0.0) || !std::isfinite(interval_length_)) {
    throw DomainError("interval length must be positive and finite");
  }
  for (double x : samples_) {
    if (!std::isfinite(x)) throw DomainError("samples must be finite");
  }
}

namespace {

enum class KernelForm { kSine, kPeriodic };

double reconstruct(const SampledSignal& signal, double t, KernelForm form) {
  const double period = signal.interval_length();
  if (!(t >= 0.0 && t < period)) {
    throw DomainError("reconstruction point " + format(t) + " outside [0, " +
                      format(period) + ")");
  }
  const auto& x = signal.samples();
  const std::size_t n = x.size();
  const double h = signal.spacing();
  for (std::size_t k = 0; k < n; ++k) {
    double u = std::fmod(t - double(k) * h, period);
    if (std::abs(u) < kIntegerTolerance || std::abs(std::abs(u) - period) < kIntegerTolerance) {
      return x[k];
    }
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double u = t - double(k) * h;
    const double num = std::sin(kPi * u / h);
    const double den = std::sin(kPi * u / period);
    double w = num / den;
    if (form == KernelForm::kPeriodic && n % 2 == 0) w *= std::cos(kPi * u / period);
    sum += x[k] * w;
  }
  return sum / double(n);
}

}  // namespace

double classical_interpolate(const SampledSignal& signal, double t) {
  return reconstruct(signal, t, KernelForm::kPeriodic);
}

double dirichlet_interpolate(const SampledSignal& signal, double t) {
  return reconstruct(signal, t, KernelForm::kSine);
}

std::vector<Complex> dft(std::span<const Complex> x) {
  if (x.empty()) throw DomainError("dft of an empty vector");
  const std::size_t n = x.size();
  const double scale = 1.0 / std::sqrt(double(n));
  std::vector<Complex> y(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce jk mod N first so the angle stays small.
      const double angle = -2.0 * kPi * double((j * k) % n) / double(n);
      acc += x[k] * std::polar(1.0, angle);
    }
    y[j] = acc * scale;
  }
  return y;
}

std::vector<Complex> dft(std::span<const double> x) {
  std::vector<Complex> z(x.begin(), x.end());
  return dft(std::span<const Complex>(z));
}

std::vector<Complex> dft_matrix(std::size_t n) {
  std::vector<Complex> mat(n * n);
  const double scale = 1.0 / std::sqrt(double(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = -2.0 * kPi * double((j * k) % n) / double(n);
      mat[j * n + k] = std::polar(scale, angle);
    }
  }
  return mat;
}

Complex FourierSpectrum::evaluate(double t, double interval_length) const {
  Complex sum = 0.0;
  for (int l = -band_limit; l <= band_limit; ++l) {
    sum += at(l) * std::polar(1.0, 2.0 * kPi * double(l) * t / interval_length);
  }
  return sum;
}

FourierSpectrum fourier_coefficients(const SampledSignal& signal, int band_limit) {
  const std::size_t n = signal.size();
  if (band_limit < 0 || n < std::size_t(2 * band_limit + 1)) {
    throw UndersampledError(std::to_string(n) + " samples cannot resolve band limit " +
                            std::to_string(band_limit));
  }
  const std::vector<Complex> y = dft(std::span<const double>(signal.samples()));
  FourierSpectrum spectrum;
  spectrum.band_limit = band_limit;
  spectrum.coefficients.resize(std::size_t(2 * band_limit + 1));
  const double scale = 1.0 / std::sqrt(double(n));
  const auto sn = static_cast<long long>(n);
  for (int l = -band_limit; l <= band_limit; ++l) {
    const auto bin = static_cast<std::size_t>(((l % sn) + sn) % sn);
    spectrum.coefficients[std::size_t(l + band_limit)] = y[bin] * scale;
  }
  return spectrum;
}

}  // namespace qai::kernels
