#pragma once

// Amplitude encoding of a real number t into an m-qubit register.
//
//   |gamma_theta>  = M^{-1/2} sum_k e^{i k theta} |k>
//   |phi_{m,t}>    = QFT^dag |gamma_{2 pi t / M}>
//                  = sum_k e^{i pi (M-1)/M (t - k)} c_{M,t}(k) |k>
//   |iota_{m,t}>   = R_iota |phi_{m,t}> = sum_k c_{M,t}(k) |k>
//
// D_{m,t} is the full H -> U_gamma -> QFT^dag -> R_iota pipeline.

#include "qai/kernels.hpp"
#include "qai/sim/circuit.hpp"
#include "qai/sim/state_vector.hpp"

namespace qai::encoding {

using kernels::EncodingDomain;

struct ValueEncoding {
  int width = 0;  // m
  double target = 0.0;
  EncodingDomain domain = EncodingDomain::kUnsigned;

  std::size_t modulus() const { return std::size_t{1} << width; }
  // 2 pi t / M, not range-reduced.
  double theta() const;
  // t mapped to [0, M); throws DomainError outside V_M.
  double normalized_target() const;
};

// The angle pi (M - 1) / M used by the phase-correcting ladder.
double correction_ladder_angle(std::size_t modulus);

sim::StateVector encode_geometric(int width, double theta);

// |phi_{m,t}>. Throws DomainError for t outside V_M.
sim::StateVector encode_value(int width, double t,
                              EncodingDomain domain = EncodingDomain::kUnsigned);

// Turns |phi_{m,t}> into |iota_{m,t}> in place: a ladder of angle
// pi (M-1)/M on the register plus the global phase e^{-i pi (M-1) t'/M}.
void phase_correction_scalar(sim::StateVector& state, int width, double t,
                             EncodingDomain domain = EncodingDomain::kUnsigned);

// H -> U_gamma -> QFT^dag on `reg` of a wider circuit, optionally followed
// by R_iota.
void append_value_encoding(sim::Circuit& circuit, sim::Register reg,
                           const ValueEncoding& value, bool phase_correct);

// D_{m,t} as an operator description on m qubits.
sim::Circuit build_D(int width, double t,
                     EncodingDomain domain = EncodingDomain::kUnsigned);

}  // namespace qai::encoding
