#include "qai/encoding.hpp"

#include <numbers>

namespace qai::encoding {

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

double ValueEncoding::theta() const {
  return 2.0 * kPi * target / double(modulus());
}

double ValueEncoding::normalized_target() const {
  return kernels::canonical_target(target, domain, modulus());
}

double correction_ladder_angle(std::size_t modulus) {
  return kPi * double(modulus - 1) / double(modulus);
}

sim::StateVector encode_geometric(int width, double theta) {
  sim::Circuit c(width);
  const sim::Register reg{0, width};
  c.append(sim::HadamardLayer{reg});
  c.append(sim::PhaseLadder{reg, theta, 0});
  return c.run_from_zero();
}

void append_value_encoding(sim::Circuit& circuit, sim::Register reg,
                           const ValueEncoding& value, bool phase_correct) {
  // Validates t before any gate is emitted.
  const double normalized = value.normalized_target();
  circuit.append(sim::HadamardLayer{reg});
  circuit.append(sim::PhaseLadder{reg, value.theta(), 0});
  circuit.append(sim::Qft{reg, true});
  if (phase_correct) {
    const std::size_t m = value.modulus();
    circuit.append(sim::PhaseLadder{reg, correction_ladder_angle(m), 0});
    circuit.append(sim::SubspacePhase{0, -correction_ladder_angle(m) * normalized});
  }
}

sim::StateVector encode_value(int width, double t, EncodingDomain domain) {
  sim::Circuit c(width);
  append_value_encoding(c, {0, width}, {width, t, domain}, false);
  return c.run_from_zero();
}

void phase_correction_scalar(sim::StateVector& state, int width, double t,
                             EncodingDomain domain) {
  const ValueEncoding value{width, t, domain};
  const double normalized = value.normalized_target();
  const std::size_t m = value.modulus();
  sim::apply_gate(state, sim::PhaseLadder{{0, width}, correction_ladder_angle(m), 0});
  sim::apply_gate(state, sim::SubspacePhase{0, -correction_ladder_angle(m) * normalized});
}

sim::Circuit build_D(int width, double t, EncodingDomain domain) {
  sim::Circuit c(width);
  append_value_encoding(c, {0, width}, {width, t, domain}, true);
  return c;
}

}  // namespace qai::encoding
