#pragma once

// Plain-text `key = value` configuration used by `qai sum`.
//
//   n = 3                 # key qubits
//   m = 4                 # value qubits
//   weights = sin2        # sin2 | uniform | comma-separated list of N reals
//   hash = identity       # identity | comma-separated list of M reals
//   poly = 0.725: 1; 2.451: k1; 2.716: k0; 1.321: k0*k2
//   poly_file = f.poly    # alternative to poly, relative to the config file
//   poly_order = lsb      # lsb | msb (msb: k0 is the most significant key bit)
//   scale = 1             # coefficient scale s; the estimate is divided by s
//   domain = unsigned     # unsigned | twos

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qai/dictionary.hpp"
#include "qai/kernels.hpp"

namespace qai::viz {

class KeyValueConfig {
 public:
  // Throws ParseError on lines without '=' or duplicate keys.
  static KeyValueConfig parse(std::string_view text);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct SumConfig {
  int key_width = 0;
  int value_width = 0;
  std::vector<double> weights;
  bool identity_hash = true;
  std::vector<double> hash;  // length M; filled for identity too
  dictionary::BinaryPolynomial poly{0};
  double scale = 1.0;
  kernels::EncodingDomain domain = kernels::EncodingDomain::kUnsigned;
};

// base_dir resolves poly_file. Throws ParseError on any invalid field.
SumConfig parse_sum_config(std::string_view text, const std::string& base_dir = ".");
SumConfig load_sum_config(const std::string& path);

struct SumReport {
  double amplitude = 0.0;  // E_{|0>}
  double estimate = 0.0;
  double classical = 0.0;  // sum_k w_k h(f(k)) computed directly
  double abs_error = 0.0;
};

// A zero weight or hash vector short-circuits to a zero report. For list
// hashes the direct sum reads h between integers by linear interpolation.
SumReport run_sum(const SumConfig& config);

std::vector<double> parse_real_list(std::string_view text);

}  // namespace qai::viz
