#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qai/error.hpp"
#include "qai/kernels.hpp"

using namespace qai;
using namespace qai::kernels;

TEST(FejerKernel, IntegerTargetsAreIndicators) {
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_EQ(fejer_kernel({8, 4.0, EncodingDomain::kUnsigned}, k), k == 4 ? 1.0 : 0.0);
    EXPECT_EQ(fejer_kernel({8, -4.0, EncodingDomain::kTwosComplement}, k), k == 4 ? 1.0 : 0.0);
    EXPECT_EQ(fejer_kernel({8, -1.0, EncodingDomain::kTwosComplement}, k), k == 7 ? 1.0 : 0.0);
  }
}

TEST(FejerKernel, MatchesGeometricSumOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + int(rng() % 7);
    const std::size_t mod = std::size_t{1} << m;
    const double t = std::uniform_real_distribution<double>(0.0, double(mod))(rng);
    for (std::size_t k = 0; k < mod; ++k) {
      EXPECT_NEAR(fejer_kernel(mod, t, k), oracle::kernel(mod, t, k), 1e-12);
    }
  }
}

TEST(FejerKernel, HalfIntegerSplitsEvenly) {
  const auto row = fejer_row({8, 4.5, EncodingDomain::kUnsigned});
  EXPECT_NEAR(row[4] * row[4], row[5] * row[5], 1e-15);
  EXPECT_NEAR(row[4] * row[4], 4.0 / oracle::kPi / oracle::kPi, 2e-2);
}

TEST(FejerKernel, RowsAreUnitVectors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + int(rng() % 10);
    const std::size_t mod = std::size_t{1} << m;
    const double t = std::uniform_real_distribution<double>(0.0, double(mod))(rng);
    double s = 0.0;
    for (double c : fejer_row({mod, t, EncodingDomain::kUnsigned})) s += c * c;
    EXPECT_NEAR(s, 1.0, 1e-10) << "M=" << mod << " t=" << t;
  }
}

TEST(FejerKernel, NearestPairCarriesAtLeast81Percent) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 3 + int(rng() % 6);
    const std::size_t mod = std::size_t{1} << m;
    const double t = std::uniform_real_distribution<double>(0.0, double(mod))(rng);
    const auto lo = std::size_t(std::floor(t)) % mod;
    const auto hi = (lo + 1) % mod;
    const double a = fejer_kernel(mod, t, lo), b = fejer_kernel(mod, t, hi);
    EXPECT_GE(a * a + b * b, 0.81);
  }
}

TEST(Domain, NormalizeAndReject) {
  EXPECT_EQ(normalize_to_domain(3.5, EncodingDomain::kUnsigned, 8), 3.5);
  EXPECT_EQ(normalize_to_domain(-4.0, EncodingDomain::kTwosComplement, 8), 4.0);
  EXPECT_EQ(normalize_to_domain(-0.5, EncodingDomain::kTwosComplement, 8), 7.5);
  EXPECT_THROW(normalize_to_domain(8.0, EncodingDomain::kUnsigned, 8), DomainError);
  EXPECT_THROW(normalize_to_domain(-0.1, EncodingDomain::kUnsigned, 8), DomainError);
  EXPECT_THROW(normalize_to_domain(4.0, EncodingDomain::kTwosComplement, 8), DomainError);
  EXPECT_THROW(normalize_to_domain(NAN, EncodingDomain::kUnsigned, 8), DomainError);
  EXPECT_EQ(canonical_target(-1e-15, EncodingDomain::kUnsigned, 8), 0.0);
  EXPECT_EQ(canonical_target(-3.0, EncodingDomain::kTwosComplement, 8), 5.0);
}

TEST(Reconstruction, SamplePointsAreReproduced) {
  std::vector<double> x(32);
  for (std::size_t k = 0; k < 32; ++k) x[k] = std::exp(double(k) / 32.0);
  const SampledSignal s(x, 1.0);
  for (std::size_t k = 0; k < 32; ++k) {
    EXPECT_NEAR(classical_interpolate(s, double(k) / 32.0), x[k], 1e-12);
  }
}

TEST(Reconstruction, BandLimitedSignalsAreExact) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int band = 1 + int(rng() % 4);
    const std::size_t n = std::size_t(2 * band + 1) + rng() % 6;  // odd and even counts
    std::normal_distribution<double> g;
    std::vector<double> ac(band + 1), bc(band + 1);
    for (int l = 0; l <= band; ++l) {
      ac[l] = g(rng);
      bc[l] = l == 0 ? 0.0 : g(rng);
    }
    const double period = 0.5 + double(rng() % 5);
    auto f = [&](double t) {
      double v = 0.0;
      for (int l = 0; l <= band; ++l) {
        const double w = 2.0 * oracle::kPi * l * t / period;
        v += ac[l] * std::cos(w) + bc[l] * std::sin(w);
      }
      return v;
    };
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = f(double(k) * period / double(n));
    const SampledSignal s(x, period);
    std::uniform_real_distribution<double> u(0.0, period);
    for (int i = 0; i < 100; ++i) {
      const double t = u(rng);
      EXPECT_NEAR(classical_interpolate(s, t), f(t), 1e-9) << "N=" << n << " L=" << band;
    }
  }
}

TEST(Reconstruction, DirichletFormEqualsKernelSum) {
  // With T = N the literal sin/sin sum is sum_k x_k c_{N,t}(k).
  std::mt19937_64 rng(3);
  std::vector<double> x(16);
  for (double& v : x) v = std::normal_distribution<double>()(rng);
  const SampledSignal s(x, 16.0);
  for (double t : {0.3, 5.5, 11.77, 15.2}) {
    double ref = 0.0;
    for (std::size_t k = 0; k < 16; ++k) ref += x[k] * oracle::kernel(16, t, k);
    EXPECT_NEAR(dirichlet_interpolate(s, t), ref, 1e-12);
  }
}

TEST(Reconstruction, RejectsPointsOutsideInterval) {
  const SampledSignal s({1.0, 2.0}, 1.0);
  EXPECT_THROW(classical_interpolate(s, 1.0), DomainError);
  EXPECT_THROW(classical_interpolate(s, -0.1), DomainError);
  EXPECT_THROW(SampledSignal({}, 1.0), DomainError);
  EXPECT_THROW(SampledSignal({1.0}, 0.0), DomainError);
}

TEST(Dft, MatchesBruteForce) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (std::size_t n : {1u, 2u, 3u, 8u, 12u}) {
    std::vector<Complex> x(n);
    for (auto& v : x) v = {g(rng), g(rng)};
    const auto y = dft(std::span<const Complex>(x));
    const auto ref = oracle::mat_vec(oracle::fourier_matrix(n, -1), x);
    for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(std::abs(y[j] - ref[j]), 0.0, 1e-12);
  }
}

TEST(Dft, MatrixIsUnitary) {
  for (std::size_t n : {2u, 4u, 7u, 16u}) {
    const auto mat = dft_matrix(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Complex ip = 0.0;
        for (std::size_t k = 0; k < n; ++k) ip += std::conj(mat[k * n + a]) * mat[k * n + b];
        EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
      }
    }
  }
}

TEST(Fourier, SinSquaredCoefficients) {
  // x_k = c sin^2(t_k), t_k = 2 pi k / 8; c sin^2(t) = c/2 - c/4 (e^{2it} + e^{-2it}).
  const double c = 3.0;
  std::vector<double> x(8);
  for (std::size_t k = 0; k < 8; ++k) x[k] = c * std::pow(std::sin(2.0 * oracle::kPi * k / 8.0), 2);
  const auto z = fourier_coefficients(SampledSignal(x, 2.0 * oracle::kPi), 3);
  EXPECT_NEAR(std::abs(z.at(0) - c / 2.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(z.at(2) + c / 4.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(z.at(-2) + c / 4.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(z.at(1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(z.at(3)), 0.0, 1e-12);
  for (double t : {0.1, 1.0, 4.4}) {
    EXPECT_NEAR(z.evaluate(t, 2.0 * oracle::kPi).real(), c * std::pow(std::sin(t), 2), 1e-12);
  }
}

TEST(Fourier, UndersampledIsRejected) {
  const SampledSignal s(std::vector<double>(4, 1.0), 1.0);
  EXPECT_THROW(fourier_coefficients(s, 2), UndersampledError);
  EXPECT_NO_THROW(fourier_coefficients(SampledSignal(std::vector<double>(5, 1.0), 1.0), 2));
}
