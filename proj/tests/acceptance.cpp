// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qai/dictionary.hpp"
#include "qai/encoding.hpp"
#include "qai/kernels.hpp"
#include "qai/patterns.hpp"
#include "qai/viz/repro.hpp"

using namespace qai;
using kernels::EncodingDomain;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "[fail] ") + what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome criterion1() {
  Outcome o;
  const double p = std::norm(encoding::encode_value(3, 4.0).amplitude(4));
  o.check(std::abs(p - 1.0) <= 1e-12, fmt("P(4|t=4)=%.15f", p));
  const double q = std::norm(encoding::encode_value(3, -4.0, EncodingDomain::kTwosComplement).amplitude(4));
  o.check(std::abs(q - 1.0) <= 1e-12, fmt("P(4|t=-4,twos)=%.15f", q));
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(2024);
  double worst = 1.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 3 + int(rng() % 6);
    const std::size_t mod = std::size_t{1} << m;
    double t;
    do {
      t = std::uniform_real_distribution<double>(0.0, double(mod))(rng);
    } while (kernels::is_integer(t));
    const auto p = encoding::encode_value(m, t).probabilities();
    const auto lo = std::size_t(std::floor(t)) % mod;
    worst = std::min(worst, p[lo] + p[(lo + 1) % mod]);
  }
  o.check(worst >= 0.81, fmt("min nearest-pair mass %.6f over 1000 trials", worst));
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(3);
  double max_imag = 0.0, max_dev = 0.0, max_oracle = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + int(rng() % 6);
    const std::size_t mod = std::size_t{1} << m;
    const double t = std::uniform_real_distribution<double>(0.0, double(mod))(rng);
    const auto s = encoding::build_D(m, t).run_from_zero();
    for (std::size_t k = 0; k < mod; ++k) {
      max_imag = std::max(max_imag, std::abs(s.amplitude(k).imag()));
      max_dev = std::max(max_dev, std::abs(s.amplitude(k) - kernels::fejer_kernel(mod, t, k)));
      max_oracle = std::max(max_oracle, std::abs(s.amplitude(k) - oracle::kernel(mod, t, k)));
    }
  }
  o.check(max_imag < 1e-10, fmt("max|Im|=%.2e", max_imag));
  o.check(max_dev < 1e-10, fmt("max|amp-kernel|=%.2e", max_dev));
  o.check(max_oracle < 1e-10, fmt("max|amp-oracle|=%.2e", max_oracle));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto r = patterns::quantum_interpolate(patterns::prepare_nu2(6), 44.8);
  const double exact = std::sqrt(8.0 / (3.0 * 64.0)) * std::pow(std::sin(44.8 * oracle::kPi / 64.0), 2);
  double oracle_sum = 0.0;
  const auto a = patterns::nu2_amplitudes(6);
  for (std::size_t k = 0; k < 64; ++k) oracle_sum += a[k] * oracle::kernel(64, 44.8, k);
  o.check(std::abs(r.quantum_value - 0.1336) <= 5e-4, fmt("quantum=%.10f vs 0.1336", r.quantum_value));
  o.check(std::abs(r.quantum_value - r.classical_value) <= 1e-9,
          fmt("|q-kernel sum|=%.2e", std::abs(r.quantum_value - r.classical_value)));
  o.check(std::abs(r.quantum_value - oracle_sum) <= 1e-9,
          fmt("|q-oracle sum|=%.2e", std::abs(r.quantum_value - oracle_sum)));
  // The even-M kernel does not reproduce sin^2 exactly between samples.
  o.check(std::abs(r.quantum_value - exact) <= 1e-9,
          fmt("|q-exact %.10f|=%.2e (tol 1e-9)", exact, std::abs(r.quantum_value - exact)));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto r = patterns::quantum_interpolate(patterns::prepare_lambda(6), 44.8);
  o.check(std::abs(r.classical_value - 0.1546) <= 5e-4, fmt("classical=%.10f vs 0.1546", r.classical_value));
  o.check(std::abs(r.quantum_value - r.classical_value) <= 1e-9,
          fmt("|q-classical|=%.2e", std::abs(r.quantum_value - r.classical_value)));
  o.check(std::abs(r.quantum_value - 0.1533) <= 2e-3, fmt("|q-0.1533|=%.2e", std::abs(r.quantum_value - 0.1533)));
  o.detail += fmt("; reference: 0.1546*292.137=%.2f (reference 44.79 from 0.1533)", 0.1546 * 292.137);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto poly = viz::expected_value_example_polynomial();
  std::vector<double> w(8);
  for (std::size_t k = 0; k < 8; ++k) w[k] = std::pow(std::sin(double(k) * oracle::kPi / 8.0), 2);
  const auto m4 = patterns::expected_value(w, poly, 3, 4);
  const auto m10 = patterns::expected_value(w, poly, 3, 10, 64.0);
  double classical = 0.0;
  for (std::size_t k = 0; k < 8; ++k) classical += w[k] * poly.evaluate(k);
  o.check(std::abs(m4.amplitude - 0.0879) <= 1e-3, fmt("E(m=4)=%.7f", m4.amplitude));
  o.check(std::abs(m4.estimate - 15.1555) <= 0.2, fmt("sum(m=4)=%.6f", m4.estimate));
  o.check(std::abs(classical - 15.9130) <= 1e-3, fmt("classical=%.6f", classical));
  o.check(std::abs(m10.estimate - 15.9186) <= 5e-2, fmt("sum(m=10,x64)=%.6f", m10.estimate));
  const double e4 = std::abs(m4.estimate - classical), e10 = std::abs(m10.estimate - classical);
  o.check(e10 < e4, fmt("err m=10 %.2e < m=4 %.2e", e10, e4));
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + int(rng() % 3);
    const int m = 1 + int(rng() % 5);
    const std::size_t nn = std::size_t{1} << n, mm = std::size_t{1} << m;
    std::vector<double> table(nn);
    std::uniform_real_distribution<double> u(0.0, double(mm) - 1.0);
    for (double& v : table) v = u(rng);
    const auto poly = dictionary::polynomial_from_table(table);
    const auto a = patterns::WeightSpec::from_weights(oracle::random_unit(rng, nn));
    const auto b = patterns::WeightSpec::from_weights(oracle::random_unit(rng, mm));
    const double got = patterns::generalized_inner_product(a, poly, b);
    worst = std::max(worst, std::abs(got - oracle::double_sum(a.amplitudes, table, b.amplitudes)));
  }
  o.check(worst <= 1e-9, fmt("max|circuit-double sum|=%.2e over 100 instances", worst));
  return o;
}

double max_error_on(const kernels::SampledSignal& s, const std::function<double(double)>& f,
                    double from, double to) {
  double worst = 0.0;
  const double period = s.interval_length();
  for (int i = 0; i <= 4000; ++i) {
    const double t = period * (from + (to - from) * i / 4000.0);
    if (t >= period) continue;
    worst = std::max(worst, std::abs(kernels::classical_interpolate(s, t) - f(t)));
  }
  return worst;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  const double two_pi = 2.0 * oracle::kPi;
  for (auto [name, f] : std::vector<std::pair<const char*, std::function<double(double)>>>{
           {"sin", [](double x) { return std::sin(x); }},
           {"sin^2", [](double x) { return std::sin(x) * std::sin(x); }}}) {
    std::vector<double> x(8);
    for (std::size_t k = 0; k < 8; ++k) x[k] = f(double(k) * two_pi / 8.0);
    const kernels::SampledSignal s(x, two_pi);
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.0, two_pi);
    for (int i = 0; i < 100; ++i) {
      const double t = u(rng);
      worst = std::max(worst, std::abs(kernels::classical_interpolate(s, t) - f(t)));
    }
    o.check(worst <= 1e-9, std::string(name) + fmt(" max err %.2e", worst));
  }
  for (auto [name, f] : std::vector<std::pair<const char*, std::function<double(double)>>>{
           {"x", [](double x) { return x; }}, {"e^x", [](double x) { return std::exp(x); }}}) {
    std::vector<double> x(32);
    for (std::size_t k = 0; k < 32; ++k) x[k] = f(double(k) / 32.0);
    const kernels::SampledSignal s(x, 1.0);
    double at_samples = 0.0;
    for (std::size_t k = 0; k < 32; ++k) {
      at_samples = std::max(at_samples, std::abs(kernels::classical_interpolate(s, double(k) / 32.0) - x[k]));
    }
    const double middle = max_error_on(s, f, 0.25, 0.75);
    const double outer = std::max(max_error_on(s, f, 0.0, 0.25), max_error_on(s, f, 0.75, 1.0));
    o.check(at_samples <= 1e-12, std::string(name) + fmt(" sample err %.2e", at_samples));
    o.check(middle < outer, std::string(name) + fmt(" middle %.3e < outer %.3e", middle, outer));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  double worst = 1.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + int(rng() % 4);
    const std::size_t mm = std::size_t{1} << m;
    std::vector<double> table(4);
    std::uniform_real_distribution<double> u(0.0, double(mm) - 1.0);
    for (double& v : table) v = u(rng);
    const auto poly = dictionary::polynomial_from_table(table);
    const sim::RegisterLayout layout{2, m};
    const auto d = dictionary::apply_F_prime(sim::StateVector(layout.num_qubits()), layout, poly);
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<double> iota(mm);
      for (std::size_t v = 0; v < mm; ++v) iota[v] = oracle::kernel(mm, table[k], v);
      worst = std::min(worst, oracle::fidelity(d.value_slice(k), iota));
    }
  }
  o.check(worst >= 1.0 - 1e-10, fmt("min slice fidelity 1-%.2e", 1.0 - worst));
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::string report = viz::format_report(viz::run_repro("nothing-matches"));
  bool listed = true;
  for (const char* v : {"0.1369", "0.1342", "ibm_perth", "0.1347", "0.1541", "ibmq_guadalupe"}) {
    listed = listed && report.find(v) != std::string::npos;
  }
  bool asserted = false;
  for (const auto& c : viz::repro_cases()) {
    for (double v : {0.1369, 0.1342, 0.1347, 0.1541}) asserted = asserted || c.expected == v;
  }
  o.check(listed, "hardware values listed as references in the repro report");
  o.check(!asserted, "no repro case asserts a hardware value");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"integer encoding exactness", criterion1},
      {"nearest-pair mass >= 0.81", criterion2},
      {"phase-corrected amplitudes real, equal kernel", criterion3},
      {"N2 interpolation at t=44.8", criterion4},
      {"L6 interpolation at t=44.8", criterion5},
      {"weighted sum example, m=4 and m=10 x64", criterion6},
      {"inner product vs brute-force double sum", criterion7},
      {"classical reconstruction", criterion8},
      {"dictionary slice identity", criterion9},
      {"hardware numbers recorded, not asserted", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %-46s [%.3fs]  %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), secs, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
