#pragma once

// State dumps (JSON) and sweep tables (CSV).
//
// JSON schema:
//   {"num_qubits": q, "key_width": n, "value_width": m,
//    "amplitudes": [[re, im], ...]}
// key_width / value_width are present only for dictionary states; amplitudes
// are in basis-index order.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qai/sim/state_vector.hpp"

namespace qai::viz {

struct StateDump {
  int num_qubits = 0;
  std::optional<sim::RegisterLayout> layout;
  std::vector<Complex> amplitudes;
};

StateDump make_dump(const sim::StateVector& state,
                    std::optional<sim::RegisterLayout> layout = std::nullopt);

std::string to_json(const StateDump& dump);
// Throws ParseError on malformed input or inconsistent metadata.
StateDump dump_from_json(std::string_view text);

struct SweepRow {
  double t = 0.0;
  double quantum = 0.0;
  double classical = 0.0;
  std::optional<double> exact;
};

// Header `t,quantum,classical,exact`; values at 9 significant digits, an
// empty exact cell when unknown.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::string_view text);

}  // namespace qai::viz
