#include "qai/viz/io.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qai/error.hpp"

namespace qai::viz {

using nlohmann::json;

StateDump make_dump(const sim::StateVector& state,
                    std::optional<sim::RegisterLayout> layout) {
  if (layout && layout->num_qubits() != state.num_qubits()) {
    throw LayoutError("layout does not match the state's qubit count");
  }
  const auto amps = state.amplitudes();
  return {state.num_qubits(), layout, {amps.begin(), amps.end()}};
}

std::string to_json(const StateDump& dump) {
  json j;
  j["num_qubits"] = dump.num_qubits;
  if (dump.layout) {
    j["key_width"] = dump.layout->key_width;
    j["value_width"] = dump.layout->value_width;
  }
  json amps = json::array();
  for (const Complex& a : dump.amplitudes) amps.push_back({a.real(), a.imag()});
  j["amplitudes"] = std::move(amps);
  return j.dump(1) + "\n";
}

StateDump dump_from_json(std::string_view text) {
  StateDump dump;
  try {
    const json j = json::parse(text);
    dump.num_qubits = j.at("num_qubits").get<int>();
    const bool has_key = j.contains("key_width");
    const bool has_value = j.contains("value_width");
    if (has_key != has_value) {
      throw ParseError("key_width and value_width must appear together");
    }
    if (has_key) {
      dump.layout = sim::RegisterLayout{j.at("key_width").get<int>(),
                                        j.at("value_width").get<int>()};
      if (dump.layout->num_qubits() != dump.num_qubits) {
        throw ParseError("key_width + value_width != num_qubits");
      }
    }
    for (const auto& pair : j.at("amplitudes")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("each amplitude must be a [re, im] pair");
      }
      dump.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("state dump: ") + e.what());
  }
  if (dump.num_qubits < 1 || dump.num_qubits > sim::StateVector::kMaxQubits ||
      dump.amplitudes.size() != (std::size_t{1} << dump.num_qubits)) {
    throw ParseError("state dump: amplitude count does not match num_qubits");
  }
  return dump;
}

namespace {

std::string sig9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "t,quantum,classical,exact\n";
  for (const SweepRow& r : rows) {
    os << sig9(r.t) << ',' << sig9(r.quantum) << ',' << sig9(r.classical) << ',';
    if (r.exact) os << sig9(*r.exact);
    os << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (cells.size() != 4) throw ParseError("sweep CSV row needs 4 cells: " + line);
    try {
      SweepRow r{std::stod(cells[0]), std::stod(cells[1]), std::stod(cells[2]), {}};
      if (!cells[3].empty()) r.exact = std::stod(cells[3]);
      rows.push_back(r);
    } catch (const std::exception&) {
      throw ParseError("sweep CSV: bad number in row: " + line);
    }
  }
  return rows;
}

}  // namespace qai::viz
