#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qai/dictionary.hpp"
#include "qai/error.hpp"

using namespace qai;
using namespace qai::dictionary;

namespace {

BinaryPolynomial random_poly(std::mt19937_64& rng, int n, double lo, double hi) {
  std::vector<double> table(std::size_t{1} << n);
  std::uniform_real_distribution<double> u(lo, hi);
  for (double& v : table) v = u(rng);
  return polynomial_from_table(table);
}

}  // namespace

TEST(Polynomial, EvaluatesMonomials) {
  // f(k) = 1.2 + 0.4 k on two bits.
  BinaryPolynomial p(2);
  p.add_term(0, 1.2).add_term(0b01, 0.4).add_term(0b10, 0.8);
  EXPECT_NEAR(p.evaluate(3), 2.4, 1e-15);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(p.evaluate(k), 1.2 + 0.4 * double(k), 1e-15);
}

TEST(Polynomial, MsbOrderedExample) {
  const auto p = parse_polynomial("0.725: 1; 2.451: k1; 2.716: k0; 1.321: k0*k2", 3,
                                  VariableOrder::kMsbFirst);
  // k = 0b101: k0 = 1 (MSB), k1 = 0, k2 = 1.
  EXPECT_NEAR(p.evaluate(0b101), 0.725 + 2.716 + 1.321, 1e-12);
  EXPECT_NEAR(p.evaluate(0b100), 0.725 + 2.716, 1e-12);
  EXPECT_NEAR(p.evaluate(0b010), 0.725 + 2.451, 1e-12);
}

TEST(Polynomial, MobiusRoundTrip) {
  std::mt19937_64 rng(31);
  for (int n = 0; n <= 6; ++n) {
    std::vector<double> table(std::size_t{1} << n);
    for (double& v : table) v = std::normal_distribution<double>()(rng);
    const auto p = polynomial_from_table(table);
    std::vector<double> coeffs(table.size(), 0.0);
    for (const auto& [mask, c] : p.terms()) coeffs[mask] = c;
    for (std::size_t k = 0; k < table.size(); ++k) {
      EXPECT_NEAR(oracle::evaluate_subsets(coeffs, k), table[k], 1e-12);
      EXPECT_NEAR(p.evaluate(k), table[k], 1e-12);
    }
  }
  const double bad[3] = {1, 2, 3};
  EXPECT_THROW(polynomial_from_table(bad), RangeError);
}

TEST(Polynomial, ParseAndFormat) {
  const auto p = parse_polynomial("# comment\n1.5: 1\n-2: k0*k1   # trailing\n0.25: k2\n", 3);
  EXPECT_EQ(p.coefficient(0), 1.5);
  EXPECT_EQ(p.coefficient(0b011), -2.0);
  EXPECT_EQ(p.coefficient(0b100), 0.25);
  const auto q = parse_polynomial(format_polynomial(p), 3);
  EXPECT_EQ(p.terms(), q.terms());
}

TEST(Polynomial, ParseErrors) {
  EXPECT_THROW(parse_polynomial("abc: 1", 2), ParseError);
  EXPECT_THROW(parse_polynomial("1.0 k0", 2), ParseError);
  EXPECT_THROW(parse_polynomial("1.0: k5", 2), ParseError);
  EXPECT_THROW(parse_polynomial("1.0: x0", 2), ParseError);
}

TEST(Range, AdmissibleValues) {
  using qai::kernels::EncodingDomain;
  EXPECT_TRUE(value_admissible(7.0, EncodingDomain::kUnsigned, 8));
  EXPECT_FALSE(value_admissible(7.5, EncodingDomain::kUnsigned, 8));
  EXPECT_TRUE(value_admissible(6.5, EncodingDomain::kUnsigned, 8));
  EXPECT_FALSE(value_admissible(8.0, EncodingDomain::kUnsigned, 8));
  EXPECT_TRUE(value_admissible(-4.0, EncodingDomain::kTwosComplement, 8));
  EXPECT_FALSE(value_admissible(3.5, EncodingDomain::kTwosComplement, 8));
}

TEST(Range, ErrorNamesOffendingKey) {
  BinaryPolynomial p(2);
  p.add_term(0, 1.0).add_term(0b11, 9.0);
  try {
    check_range(p, 3, kernels::EncodingDomain::kUnsigned);
    FAIL() << "expected RangeError";
  } catch (const RangeError& e) {
    EXPECT_NE(std::string(e.what()).find("f(3)"), std::string::npos) << e.what();
  }
}

TEST(DictionaryF, KeysAreUniformAndSlicesMatchPhi) {
  BinaryPolynomial p(2);
  p.add_term(0, 1.2).add_term(0b01, 0.4).add_term(0b10, 0.8);
  const sim::RegisterLayout layout{2, 3};
  const auto d = apply_F(sim::StateVector(5), layout, p);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(d.key_probability(k), 0.25, 1e-12);
    const auto slice = d.value_slice(k);
    const auto ref = oracle::phi_state(8, p.evaluate(k));
    // Up to a global phase per key.
    Complex ip = 0.0;
    for (std::size_t v = 0; v < 8; ++v) ip += std::conj(ref[v]) * slice[v];
    EXPECT_NEAR(std::abs(ip), 1.0, 1e-10);
  }
}

TEST(DictionaryF, PrimeSlicesAreRealKernels) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + int(rng() % 3);
    const int m = 2 + int(rng() % 3);
    const double mod = double(1 << m);
    const auto p = random_poly(rng, n, 0.0, mod - 1.0);
    const sim::RegisterLayout layout{n, m};
    const auto d = apply_F_prime(sim::StateVector(n + m), layout, p);
    const double amp = 1.0 / std::sqrt(double(1 << n));
    for (std::size_t k = 0; k < layout.key_dimension(); ++k) {
      for (std::size_t v = 0; v < layout.value_dimension(); ++v) {
        const Complex a = d.state.amplitude(layout.combine(k, v));
        EXPECT_NEAR(a.imag(), 0.0, 1e-10);
        EXPECT_NEAR(a.real(), amp * oracle::kernel(std::size_t(mod), p.evaluate(k), v), 1e-10);
      }
    }
  }
}

TEST(DictionaryF, TwosComplementValues) {
  BinaryPolynomial p(1);
  p.add_term(0, -3.0).add_term(1, 5.5);  // f(0) = -3, f(1) = 2.5
  const sim::RegisterLayout layout{1, 3};
  const auto d = apply_F_prime(sim::StateVector(4), layout, p, kernels::EncodingDomain::kTwosComplement);
  const double amp = 1.0 / std::sqrt(2.0);
  for (std::size_t v = 0; v < 8; ++v) {
    EXPECT_NEAR(std::abs(d.state.amplitude(layout.combine(0, v)) - amp * (v == 5 ? 1.0 : 0.0)), 0.0,
                1e-12);
    EXPECT_NEAR(std::abs(d.state.amplitude(layout.combine(1, v)) - amp * oracle::kernel(8, 2.5, v)),
                0.0, 1e-12);
  }
}

TEST(DictionaryF, ConstantIntegerPolyHasNNonzeroAmplitudes) {
  BinaryPolynomial p(3);
  p.add_term(0, 5.0);
  const sim::RegisterLayout layout{3, 3};
  const auto d = apply_F(sim::StateVector(6), layout, p);
  int nonzero = 0;
  for (auto a : d.state.amplitudes()) nonzero += std::abs(a) > 1e-9 ? 1 : 0;
  EXPECT_EQ(nonzero, 8);
}

TEST(DictionaryF, RangeAndLayoutErrors) {
  BinaryPolynomial p(2);
  p.add_term(0, 7.5);
  const sim::RegisterLayout layout{2, 3};
  EXPECT_THROW(apply_F(sim::StateVector(5), layout, p), RangeError);
  BinaryPolynomial q(2);
  q.add_term(0, 1.0);
  EXPECT_THROW(apply_F(sim::StateVector(4), layout, q), LayoutError);
  EXPECT_THROW(apply_F(sim::StateVector(5), sim::RegisterLayout{3, 2}, q), LayoutError);
}
