#pragma once

// Regression harness regenerating the reference numbers from simulation.

#include <functional>
#include <string>
#include <vector>

#include "qai/dictionary.hpp"

namespace qai::viz {

enum class Provenance { kReference, kDerived };

struct ReproCase {
  std::string id;
  std::string description;
  double expected = 0.0;
  double tolerance = 0.0;
  Provenance provenance = Provenance::kReference;
  std::function<double()> compute;
};

struct ReproRow {
  std::string id;
  std::string description;
  double expected = 0.0;
  double actual = 0.0;
  double abs_error = 0.0;
  double tolerance = 0.0;
  Provenance provenance = Provenance::kReference;
  bool pass = false;
};

// 0.725 + 2.451 k1 + 2.716 k0 + 1.321 k0 k2 with k0 the most significant
// of three key bits; the reference sums are reproduced with this reading.
dictionary::BinaryPolynomial expected_value_example_polynomial();

// All cases, sorted by id.
std::vector<ReproCase> repro_cases();

// Cases whose id matches the shell-style glob (empty matches all), in id order.
std::vector<ReproRow> run_repro(const std::string& filter = {});

// Fixed-width table plus the reference-only notes.
std::string format_report(const std::vector<ReproRow>& rows);

}  // namespace qai::viz
