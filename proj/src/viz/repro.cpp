#include "qai/viz/repro.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qai/encoding.hpp"
#include "qai/kernels.hpp"
#include "qai/patterns.hpp"

namespace qai::viz {

namespace {

using kernels::EncodingDomain;
constexpr double kPi = std::numbers::pi;
constexpr double kReferenceTolerance = 5e-4;

std::vector<double> sin2_weights(int n) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> w(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double s = std::sin(double(k) * kPi / double(count));
    w[k] = s * s;
  }
  return w;
}

double probability(int m, double t, EncodingDomain domain, std::size_t k) {
  return std::norm(encoding::encode_value(m, t, domain).amplitude(k));
}

double max_reconstruction_error(double (*f)(double)) {
  const double period = 2 * kPi;
  std::vector<double> samples(8);
  for (std::size_t k = 0; k < 8; ++k) samples[k] = f(double(k) * period / 8);
  const kernels::SampledSignal signal(samples, period);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = period * (i + 0.37) / 100.0;
    worst = std::max(worst, std::abs(kernels::classical_interpolate(signal, t) - f(t)));
  }
  return worst;
}

// Integer-coefficient reading of the m=10 example: x100 with the constant
// rounded to 73. The source coefficients are ambiguous, so this is only
// reported next to the reference value 15.94.
double integer_variant_estimate() {
  const auto poly = dictionary::parse_polynomial("73: 1; 245: k1; 272: k0; 132: k0*k2", 3,
                                                 dictionary::VariableOrder::kMsbFirst);
  return patterns::expected_value(sin2_weights(3), poly, 3, 10).estimate / 100.0;
}

patterns::WeightedSumResult weighted_example(int m, double scale) {
  return patterns::expected_value(sin2_weights(3), expected_value_example_polynomial(), 3, m,
                                  scale);
}

}  // namespace

dictionary::BinaryPolynomial expected_value_example_polynomial() {
  return dictionary::parse_polynomial("0.725: 1; 2.451: k1; 2.716: k0; 1.321: k0*k2", 3,
                                      dictionary::VariableOrder::kMsbFirst);
}

std::vector<ReproCase> repro_cases() {
  using P = Provenance;
  std::vector<ReproCase> cases = {
      {"classical.sin_8_samples.max_error", "max |reconstruction - sin| on [0, 2pi)", 0.0, 1e-9,
       P::kDerived, [] { return max_reconstruction_error([](double x) { return std::sin(x); }); }},
      {"classical.sin2_8_samples.max_error", "max |reconstruction - sin^2| on [0, 2pi)", 0.0,
       1e-9, P::kDerived, [] {
         return max_reconstruction_error([](double x) { return std::sin(x) * std::sin(x); });
       }},
      {"encode.phi_3_4.p4", "P(4) for |phi_{3,4}>", 1.0, 1e-12, P::kReference,
       [] { return probability(3, 4.0, EncodingDomain::kUnsigned, 4); }},
      {"encode.phi_3_-4_twos.p4", "P(4) for |phi_{3,-4}>, two's complement", 1.0, 1e-12,
       P::kReference, [] { return probability(3, -4.0, EncodingDomain::kTwosComplement, 4); }},
      {"encode.phi_3_2.7.top_two", "P(2) + P(3) for |phi_{3,2.7}> vs kernel",
       std::pow(kernels::fejer_kernel(8, 2.7, 2), 2) + std::pow(kernels::fejer_kernel(8, 2.7, 3), 2),
       1e-12, P::kDerived,
       [] {
         return probability(3, 2.7, EncodingDomain::kUnsigned, 2) +
                probability(3, 2.7, EncodingDomain::kUnsigned, 3);
       }},
      {"encode.phi_3_4.5.split", "P(4) - P(5) for |phi_{3,4.5}>", 0.0, 1e-12, P::kReference,
       [] {
         return probability(3, 4.5, EncodingDomain::kUnsigned, 4) -
                probability(3, 4.5, EncodingDomain::kUnsigned, 5);
       }},
      {"encode.iota_6_44.8.kernel_dev", "max |<k|D_{6,44.8}|0> - c_{64,44.8}(k)|", 0.0, 1e-10,
       P::kDerived,
       [] {
         const auto s = encoding::build_D(6, 44.8).run_from_zero();
         double worst = 0.0;
         for (std::size_t k = 0; k < 64; ++k) {
           worst = std::max(worst, std::abs(s.amplitude(k) - kernels::fejer_kernel(64, 44.8, k)));
         }
         return worst;
       }},
      {"interp.nu2_6_44.8", "<0|N2^dag D_{6,44.8}|0>", 0.1336, kReferenceTolerance, P::kReference,
       [] { return patterns::quantum_interpolate(patterns::prepare_nu2(6), 44.8).quantum_value; }},
      {"interp.nu2_6_44.8.vs_classical", "|quantum - kernel sum| for N2", 0.0, 1e-9,
       P::kDerived,
       [] {
         const auto r = patterns::quantum_interpolate(patterns::prepare_nu2(6), 44.8);
         return std::abs(r.quantum_value - r.classical_value);
       }},
      {"interp.lambda_6_44.8.classical", "kernel sum for L_6 at 44.8", 0.1546, kReferenceTolerance,
       P::kReference,
       [] {
         return patterns::quantum_interpolate(patterns::prepare_lambda(6), 44.8).classical_value;
       }},
      // The reference simulation used a heuristic L_6 circuit (0.1533); the
      // exact loader lands on the kernel sum, 1.3e-3 away.
      {"interp.lambda_6_44.8.quantum", "<0|L6^dag D_{6,44.8}|0> vs heuristic-prep value",
       0.1533, 2e-3, P::kReference,
       [] {
         return patterns::quantum_interpolate(patterns::prepare_lambda(6), 44.8).quantum_value;
       }},
      {"interp.lambda_6_44.8.vs_classical", "|quantum - kernel sum| for L6", 0.0, 1e-9,
       P::kDerived,
       [] {
         const auto r = patterns::quantum_interpolate(patterns::prepare_lambda(6), 44.8);
         return std::abs(r.quantum_value - r.classical_value);
       }},
      {"interp.lambda_6.normalization", "sqrt(sum_{k<64} k^2)", 292.137, kReferenceTolerance,
       P::kReference, [] { return patterns::lambda_normalization(6); }},
      {"sum.weighted_m4.amplitude", "E_|0> for n=3, m=4", 0.0879, 1e-3, P::kReference,
       [] { return weighted_example(4, 1.0).amplitude; }},
      {"sum.weighted_m4.estimate", "rescaled weighted sum, m=4", 15.1555, 0.2,
       P::kReference, [] { return weighted_example(4, 1.0).estimate; }},
      {"sum.weighted.classical", "direct sum_k w_k f(k)", 15.9130, 1e-3, P::kReference,
       [] {
         return patterns::direct_weighted_sum(sin2_weights(3), expected_value_example_polynomial(),
                                              [](double f) { return f; });
       }},
      {"sum.weighted_m10_s64.amplitude", "E_|0> for m=10, coefficients x64", 0.0110,
       kReferenceTolerance, P::kReference, [] { return weighted_example(10, 64.0).amplitude; }},
      {"sum.weighted_m10_s64.estimate", "rescaled weighted sum, m=10, x64", 15.9186,
       5e-2, P::kReference, [] { return weighted_example(10, 64.0).estimate; }},
  };
  std::sort(cases.begin(), cases.end(),
            [](const ReproCase& a, const ReproCase& b) { return a.id < b.id; });
  return cases;
}

std::vector<ReproRow> run_repro(const std::string& filter) {
  std::vector<ReproRow> rows;
  for (const ReproCase& c : repro_cases()) {
    if (!filter.empty() && fnmatch(filter.c_str(), c.id.c_str(), 0) != 0) continue;
    ReproRow row{c.id, c.description, c.expected, 0.0, 0.0, c.tolerance, c.provenance, false};
    row.actual = c.compute();
    row.abs_error = std::abs(row.actual - row.expected);
    row.pass = std::isfinite(row.actual) && row.abs_error <= row.tolerance;
    rows.push_back(row);
  }
  return rows;
}

std::string format_report(const std::vector<ReproRow>& rows) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-34s %-7s %14s %14s %10s %9s  %s\n", "case", "source",
                "expected", "actual", "|delta|", "tol", "result");
  os << buf;
  int failures = 0;
  for (const ReproRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%-34s %-7s %14.6f %14.6f %10.2e %9.1e  %s\n", r.id.c_str(),
                  r.provenance == Provenance::kReference ? "ref" : "derived", r.expected, r.actual,
                  r.abs_error, r.tolerance, r.pass ? "PASS" : "FAIL");
    os << buf;
    failures += r.pass ? 0 : 1;
  }
  os << "\n" << rows.size() - failures << "/" << rows.size() << " cases passed\n";
  char ref[512];
  std::snprintf(ref, sizeof ref,
                "\nReference values, not asserted:\n"
                "  de-normalized L6 interpolant: %.4f * 292.137 = %.2f"
                " (reference 44.79 from the heuristic-prep 0.1533)\n"
                "  integer coefficients x100, constant 73, m=10: %.4f (reference 15.94)\n",
                0.1546, 0.1546 * 292.137, integer_variant_estimate());
  os << ref
     << "  hardware, N2 at t=44.8 on ibm_perth: mean 0.1369, best run 0.1342\n"
     << "  hardware, L6 at t=44.8 on ibmq_guadalupe: mean 0.1347, best run 0.1541\n"
     << "  hardware runs are not reproducible by a statevector simulation\n";
  return os.str();
}

}  // namespace qai::viz
