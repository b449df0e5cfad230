#include "qai/sim/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qai/error.hpp"

namespace qai::sim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::uint64_t all_qubits(int num_qubits) {
  return (std::uint64_t{1} << num_qubits) - 1;
}

void check_register(Register reg, int num_qubits) {
  if (reg.width < 1 || reg.offset < 0 || reg.offset + reg.width > num_qubits) {
    throw LayoutError("register [" + std::to_string(reg.offset) + ", " +
                      std::to_string(reg.offset + reg.width) +
                      ") does not fit " + std::to_string(num_qubits) +
                      " qubits");
  }
}

void check_controls(std::uint64_t controls, int num_qubits) {
  if ((controls & ~all_qubits(num_qubits)) != 0) {
    throw LayoutError("control qubit outside the state");
  }
}

void check_controls(std::uint64_t controls, Register target, int num_qubits) {
  check_controls(controls, num_qubits);
  if (target.overlaps(controls)) {
    throw LayoutError("control qubit overlaps the target register");
  }
}

void validate(const Gate& gate, int num_qubits) {
  std::visit(
      Overloaded{
          [&](const HadamardLayer& g) { check_register(g.reg, num_qubits); },
          [&](const PhaseLadder& g) {
            check_register(g.reg, num_qubits);
            check_controls(g.controls, g.reg, num_qubits);
          },
          [&](const Qft& g) { check_register(g.reg, num_qubits); },
          [&](const SubspacePhase& g) { check_controls(g.controls, num_qubits); },
          [&](const DiagonalPhase& g) {
            check_register(g.reg, num_qubits);
            if (g.phases.size() != g.reg.dimension()) {
              throw LayoutError("diagonal phase table has wrong length");
            }
          },
          [&](const Reflection& g) {
            check_register(g.reg, num_qubits);
            if (g.axis.size() != g.reg.dimension()) {
              throw LayoutError("reflection axis has wrong length");
            }
          },
      },
      gate);
}

// Dispatch table over the two kernel namespaces.
struct Kernels {
  void (*hadamard)(std::span<Complex>, int);
  void (*subspace_phase)(std::span<Complex>, std::uint64_t, double);
  void (*swap_qubits)(std::span<Complex>, int, int);
  void (*register_diagonal)(std::span<Complex>, Register,
                            std::span<const Complex>, std::uint64_t);
  void (*reflect)(std::span<Complex>, Register, std::span<const Complex>,
                  Complex);
};

constexpr Kernels kSerialKernels{serial::hadamard, serial::subspace_phase,
                                 serial::swap_qubits, serial::register_diagonal,
                                 serial::reflect};
constexpr Kernels kParallelKernels{
    parallel::hadamard, parallel::subspace_phase, parallel::swap_qubits,
    parallel::register_diagonal, parallel::reflect};

const Kernels& kernels_for(Backend backend) {
  return backend == Backend::kSerial ? kSerialKernels : kParallelKernels;
}

std::uint64_t qubit_bit(Register reg, int local) {
  return std::uint64_t{1} << (reg.offset + local);
}

// Textbook QFT circuit: for the most significant qubit downwards, H followed
// by controlled phases pi / 2^d from each less significant qubit, then a
// bit-reversal. The inverse replays the sequence backwards with negated
// angles.
void apply_qft_gates(std::span<Complex> amps, Register reg, bool inverse,
                     const Kernels& k) {
  const int w = reg.width;
  auto swaps = [&] {
    for (int i = 0; i < w / 2; ++i) {
      k.swap_qubits(amps, reg.offset + i, reg.offset + w - 1 - i);
    }
  };
  if (!inverse) {
    for (int j = w - 1; j >= 0; --j) {
      k.hadamard(amps, reg.offset + j);
      for (int c = j - 1; c >= 0; --c) {
        const double angle = std::numbers::pi / double(std::uint64_t{1} << (j - c));
        k.subspace_phase(amps, qubit_bit(reg, c) | qubit_bit(reg, j), angle);
      }
    }
    swaps();
  } else {
    swaps();
    for (int j = 0; j < w; ++j) {
      for (int c = 0; c < j; ++c) {
        const double angle = std::numbers::pi / double(std::uint64_t{1} << (j - c));
        k.subspace_phase(amps, qubit_bit(reg, c) | qubit_bit(reg, j), -angle);
      }
      k.hadamard(amps, reg.offset + j);
    }
  }
}

}  // namespace

std::string gate_name(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const HadamardLayer&) { return std::string("H"); },
          [](const PhaseLadder&) { return std::string("U_gamma"); },
          [](const Qft& g) { return std::string(g.inverse ? "QFT^dag" : "QFT"); },
          [](const SubspacePhase&) { return std::string("phase"); },
          [](const DiagonalPhase&) { return std::string("diag"); },
          [](const Reflection&) { return std::string("prep"); },
      },
      gate);
}

void apply_gate(StateVector& state, const Gate& gate, Backend backend) {
  validate(gate, state.num_qubits());
  const Kernels& k = kernels_for(backend);
  std::span<Complex> amps = state.mutable_amplitudes();
  std::visit(
      Overloaded{
          [&](const HadamardLayer& g) {
            for (int j = 0; j < g.reg.width; ++j) k.hadamard(amps, g.reg.offset + j);
          },
          [&](const PhaseLadder& g) {
            std::vector<Complex> factors(g.reg.dimension());
            for (std::size_t i = 0; i < factors.size(); ++i) {
              factors[i] = std::polar(1.0, double(i) * g.theta);
            }
            k.register_diagonal(amps, g.reg, factors, g.controls);
          },
          [&](const Qft& g) { apply_qft_gates(amps, g.reg, g.inverse, k); },
          [&](const SubspacePhase& g) {
            k.subspace_phase(amps, g.controls, g.angle);
          },
          [&](const DiagonalPhase& g) {
            std::vector<Complex> factors(g.phases.size());
            for (std::size_t i = 0; i < factors.size(); ++i) {
              factors[i] = std::polar(1.0, g.phases[i]);
            }
            k.register_diagonal(amps, g.reg, factors, 0);
          },
          [&](const Reflection& g) { k.reflect(amps, g.reg, g.axis, g.phase); },
      },
      gate);
}

Gate adjoint(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const HadamardLayer& g) -> Gate { return g; },
          [](const PhaseLadder& g) -> Gate {
            return PhaseLadder{g.reg, -g.theta, g.controls};
          },
          [](const Qft& g) -> Gate { return Qft{g.reg, !g.inverse}; },
          [](const SubspacePhase& g) -> Gate {
            return SubspacePhase{g.controls, -g.angle};
          },
          [](const DiagonalPhase& g) -> Gate {
            DiagonalPhase d{g.reg, g.phases};
            for (double& p : d.phases) p = -p;
            return d;
          },
          // The reflection is Hermitian, so only the scalar phase conjugates.
          [](const Reflection& g) -> Gate {
            return Reflection{g.reg, g.axis, std::conj(g.phase)};
          },
      },
      gate);
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw CapacityError("circuit qubit count " + std::to_string(num_qubits) +
                        " outside [1, " +
                        std::to_string(StateVector::kMaxQubits) + "]");
  }
}

Circuit& Circuit::append(Gate gate) {
  validate(gate, num_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw LayoutError("cannot append a " + std::to_string(other.num_qubits_) +
                      "-qubit circuit to a " + std::to_string(num_qubits_) +
                      "-qubit circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::adjoint() const {
  Circuit out(num_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(sim::adjoint(*it));
  }
  return out;
}

Circuit Circuit::embedded(int total_qubits, int offset) const {
  if (offset < 0 || offset + num_qubits_ > total_qubits) {
    throw LayoutError("embedding does not fit the target width");
  }
  auto shift = [&](Register r) { return Register{r.offset + offset, r.width}; };
  Circuit out(total_qubits);
  for (const Gate& g : gates_) {
    out.append(std::visit(
        Overloaded{
            [&](const HadamardLayer& x) -> Gate { return HadamardLayer{shift(x.reg)}; },
            [&](const PhaseLadder& x) -> Gate {
              return PhaseLadder{shift(x.reg), x.theta, x.controls << offset};
            },
            [&](const Qft& x) -> Gate { return Qft{shift(x.reg), x.inverse}; },
            [&](const SubspacePhase& x) -> Gate {
              // A global phase stays global; otherwise move the controls.
              return SubspacePhase{x.controls << offset, x.angle};
            },
            [&](const DiagonalPhase& x) -> Gate {
              return DiagonalPhase{shift(x.reg), x.phases};
            },
            [&](const Reflection& x) -> Gate {
              return Reflection{shift(x.reg), x.axis, x.phase};
            },
        },
        g));
  }
  return out;
}

void Circuit::apply(StateVector& state, Backend backend) const {
  if (state.num_qubits() != num_qubits_) {
    throw LayoutError("circuit acts on " + std::to_string(num_qubits_) +
                      " qubits, state has " +
                      std::to_string(state.num_qubits()));
  }
  for (const Gate& g : gates_) apply_gate(state, g, backend);
}

StateVector Circuit::run_from_zero(Backend backend) const {
  StateVector state(num_qubits_);
  apply(state, backend);
  return state;
}

void apply_hadamard_layer(StateVector& state, Register reg) {
  apply_gate(state, HadamardLayer{reg});
}

void apply_phase_ladder(StateVector& state, Register reg, double theta,
                        std::uint64_t controls) {
  apply_gate(state, PhaseLadder{reg, theta, controls});
}

void apply_qft(StateVector& state, Register reg) {
  apply_gate(state, Qft{reg, false});
}

void apply_qft_inverse(StateVector& state, Register reg) {
  apply_gate(state, Qft{reg, true});
}

void apply_diagonal_phase(StateVector& state,
                          const std::function<double(std::size_t)>& phase_fn) {
  DiagonalPhase d{Register{0, state.num_qubits()}, {}};
  d.phases.resize(state.size());
  for (std::size_t i = 0; i < d.phases.size(); ++i) d.phases[i] = phase_fn(i);
  apply_gate(state, d);
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  circuit.apply(state);
}

void apply_adjoint(StateVector& state, const Circuit& circuit) {
  circuit.adjoint().apply(state);
}

}  // namespace qai::sim
