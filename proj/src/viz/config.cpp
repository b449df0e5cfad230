#include "qai/viz/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qai/error.hpp"
#include "qai/patterns.hpp"

namespace qai::viz {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid number '" + s + "' for " + what);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
  KeyValueConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ParseError("config line " + std::to_string(lineno) + ": empty key");
    if (!cfg.values_.emplace(key, value).second) {
      throw ParseError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }
  return cfg;
}

const std::string& KeyValueConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ParseError("config is missing '" + key + "'");
  return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? get(key) : fallback;
}

int KeyValueConfig::get_int(const std::string& key) const {
  const std::string& s = get(key);
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid integer '" + s + "' for " + key);
  }
}

double KeyValueConfig::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? parse_double(get(key), key) : fallback;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::stringstream ss{std::string(text)};
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(parse_double(trim(cell), "list entry"));
  return out;
}

SumConfig parse_sum_config(std::string_view text, const std::string& base_dir) {
  const KeyValueConfig kv = KeyValueConfig::parse(text);
  SumConfig cfg;
  cfg.key_width = kv.get_int("n");
  cfg.value_width = kv.get_int("m");
  if (cfg.key_width < 1 || cfg.value_width < 1 ||
      cfg.key_width + cfg.value_width > sim::StateVector::kMaxQubits) {
    throw ParseError("n and m must be >= 1 with n + m <= " +
                     std::to_string(sim::StateVector::kMaxQubits));
  }
  const std::size_t n = std::size_t{1} << cfg.key_width;
  const std::size_t m = std::size_t{1} << cfg.value_width;

  const std::string weights = kv.get_or("weights", "uniform");
  if (weights == "sin2") {
    for (std::size_t k = 0; k < n; ++k) {
      const double s = std::sin(double(k) * std::numbers::pi / double(n));
      cfg.weights.push_back(s * s);
    }
  } else if (weights == "uniform") {
    cfg.weights.assign(n, 1.0);
  } else {
    cfg.weights = parse_real_list(weights);
  }
  if (cfg.weights.size() != n) {
    throw ParseError("weights has " + std::to_string(cfg.weights.size()) + " entries, expected " +
                     std::to_string(n));
  }

  const std::string hash = kv.get_or("hash", "identity");
  cfg.identity_hash = hash == "identity";
  if (cfg.identity_hash) {
    for (std::size_t v = 0; v < m; ++v) cfg.hash.push_back(double(v));
  } else {
    cfg.hash = parse_real_list(hash);
    if (cfg.hash.size() != m) {
      throw ParseError("hash has " + std::to_string(cfg.hash.size()) + " entries, expected " +
                       std::to_string(m));
    }
  }

  const std::string order = kv.get_or("poly_order", "lsb");
  if (order != "lsb" && order != "msb") throw ParseError("poly_order must be lsb or msb");
  const auto var_order = order == "msb" ? dictionary::VariableOrder::kMsbFirst
                                        : dictionary::VariableOrder::kLsbFirst;
  if (kv.has("poly") == kv.has("poly_file")) {
    throw ParseError("config needs exactly one of 'poly' and 'poly_file'");
  }
  const std::string poly_text =
      kv.has("poly") ? kv.get("poly")
                     : read_file((std::filesystem::path(base_dir) / kv.get("poly_file")).string());
  cfg.poly = dictionary::parse_polynomial(poly_text, cfg.key_width, var_order);

  cfg.scale = kv.get_double_or("scale", 1.0);
  if (!(cfg.scale > 0.0)) throw ParseError("scale must be positive");

  const std::string domain = kv.get_or("domain", "unsigned");
  if (domain == "unsigned") {
    cfg.domain = kernels::EncodingDomain::kUnsigned;
  } else if (domain == "twos") {
    cfg.domain = kernels::EncodingDomain::kTwosComplement;
  } else {
    throw ParseError("domain must be unsigned or twos");
  }
  for (const auto& [key, value] : kv.values()) {
    static const char* known[] = {"n", "m", "weights", "hash", "poly", "poly_file",
                                  "poly_order", "scale", "domain"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError("unknown config key '" + key + "'");
  }
  return cfg;
}

SumConfig load_sum_config(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse_sum_config(read_file(path), dir.empty() ? "." : dir);
}

SumReport run_sum(const SumConfig& config) {
  // h read between integer points by linear interpolation, wrapping mod M.
  const std::size_t m = config.hash.size();
  auto hash_at = [&](double x) {
    if (config.identity_hash) return x;
    const double lo = std::floor(x);
    const double frac = x - lo;
    const auto wrap = [&](double i) {
      const auto mm = static_cast<long long>(m);
      return config.hash[std::size_t(((static_cast<long long>(i) % mm) + mm) % mm)];
    };
    return (1.0 - frac) * wrap(lo) + frac * wrap(lo + 1.0);
  };

  SumReport report;
  const double s = config.scale;
  report.classical = patterns::direct_weighted_sum(
      config.weights, config.poly, [&](double f) { return hash_at(s * f) / s; });

  double wn = 0.0, hn = 0.0;
  for (double w : config.weights) wn += w * w;
  for (double h : config.hash) hn += h * h;
  if (wn == 0.0 || hn == 0.0) {
    report.abs_error = std::abs(report.classical);
    return report;
  }
  const auto result =
      patterns::weighted_sum(config.weights, config.poly, config.hash, 1.0 / std::sqrt(wn),
                             1.0 / std::sqrt(hn), config.domain, s);
  report.amplitude = result.amplitude;
  report.estimate = result.estimate;
  report.abs_error = std::abs(report.estimate - report.classical);
  return report;
}

}  // namespace qai::viz
