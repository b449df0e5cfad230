#include "qai/dictionary.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qai/encoding.hpp"
#include "qai/error.hpp"

namespace qai::dictionary {

namespace {

constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view s, std::string_view context) {
  s = trim(s);
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("invalid coefficient '" + std::string(s) + "' in '" +
                     std::string(context) + "'");
  }
  return v;
}

std::uint64_t parse_term(std::string_view s, int num_vars, VariableOrder order,
                         std::string_view context) {
  s = trim(s);
  if (s == "1") return 0;
  std::uint64_t mask = 0;
  while (!s.empty()) {
    const auto star = s.find('*');
    std::string_view var = trim(s.substr(0, star));
    s = star == std::string_view::npos ? std::string_view{} : s.substr(star + 1);
    if (var.size() < 2 || var.front() != 'k') {
      throw ParseError("invalid variable '" + std::string(var) + "' in '" +
                       std::string(context) + "'");
    }
    int index = -1;
    const auto [ptr, ec] = std::from_chars(var.data() + 1, var.data() + var.size(), index);
    if (ec != std::errc{} || ptr != var.data() + var.size() || index < 0 ||
        index >= num_vars) {
      throw ParseError("variable '" + std::string(var) + "' outside k0..k" +
                       std::to_string(num_vars - 1) + " in '" + std::string(context) + "'");
    }
    const int bit = order == VariableOrder::kLsbFirst ? index : num_vars - 1 - index;
    mask |= std::uint64_t{1} << bit;
  }
  if (mask == 0) throw ParseError("empty term in '" + std::string(context) + "'");
  return mask;
}

}  // namespace

BinaryPolynomial::BinaryPolynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > sim::StateVector::kMaxQubits) {
    throw CapacityError("polynomial variable count " + std::to_string(num_vars) +
                        " out of range");
  }
}

BinaryPolynomial& BinaryPolynomial::add_term(std::uint64_t subset, double coefficient) {
  if (subset >> num_vars_ != 0) {
    throw LayoutError("monomial mask " + std::to_string(subset) + " uses variables beyond k" +
                      std::to_string(num_vars_ - 1));
  }
  terms_[subset] += coefficient;
  return *this;
}

double BinaryPolynomial::coefficient(std::uint64_t subset) const {
  const auto it = terms_.find(subset);
  return it == terms_.end() ? 0.0 : it->second;
}

double BinaryPolynomial::evaluate(std::uint64_t k) const {
  double sum = 0.0;
  for (const auto& [subset, c] : terms_) {
    if ((subset & k) == subset) sum += c;
  }
  return sum;
}

std::vector<double> BinaryPolynomial::table() const {
  std::vector<double> t(std::size_t{1} << num_vars_);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = evaluate(k);
  return t;
}

BinaryPolynomial BinaryPolynomial::scaled(double s) const {
  BinaryPolynomial out(num_vars_);
  for (const auto& [subset, c] : terms_) out.terms_[subset] = c * s;
  return out;
}

BinaryPolynomial BinaryPolynomial::with_reversed_variables() const {
  BinaryPolynomial out(num_vars_);
  for (const auto& [subset, c] : terms_) {
    std::uint64_t reversed = 0;
    for (int j = 0; j < num_vars_; ++j) {
      if (subset >> j & 1) reversed |= std::uint64_t{1} << (num_vars_ - 1 - j);
    }
    out.terms_[reversed] += c;
  }
  return out;
}

BinaryPolynomial polynomial_from_table(std::span<const double> values) {
  if (values.empty() || !std::has_single_bit(values.size())) {
    throw RangeError("table length " + std::to_string(values.size()) +
                     " is not a power of two");
  }
  const int n = std::countr_zero(values.size());
  std::vector<double> c(values.begin(), values.end());
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < c.size(); ++mask) {
      if (mask & b) c[mask] -= c[mask ^ b];
    }
  }
  double magnitude = 1.0;
  for (double v : values) magnitude = std::max(magnitude, std::abs(v));
  BinaryPolynomial poly(n);
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    if (std::abs(c[mask]) > 1e-13 * magnitude) poly.add_term(mask, c[mask]);
  }
  return poly;
}

BinaryPolynomial parse_polynomial(std::string_view text, int num_vars,
                                  VariableOrder order) {
  BinaryPolynomial poly(num_vars);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find_first_of("\n;", pos);
    std::string_view item =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (const auto hash = item.find('#'); hash != std::string_view::npos) {
      item = item.substr(0, hash);
    }
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected '<coefficient>: <term>', got '" + std::string(item) + "'");
    }
    const double c = parse_real(item.substr(0, colon), item);
    poly.add_term(parse_term(item.substr(colon + 1), num_vars, order, item), c);
  }
  return poly;
}

std::string format_polynomial(const BinaryPolynomial& poly) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [subset, c] : poly.terms()) {
    os << c << ": ";
    if (subset == 0) {
      os << "1";
    } else {
      bool first = true;
      for (int j = 0; j < poly.num_vars(); ++j) {
        if (!(subset >> j & 1)) continue;
        os << (first ? "" : "*") << 'k' << j;
        first = false;
      }
    }
    os << '\n';
  }
  return os.str();
}

bool value_admissible(double value, EncodingDomain domain, std::size_t modulus) {
  if (!std::isfinite(value)) return false;
  const double lo = kernels::domain_lower(domain, modulus);
  const double hi = kernels::domain_upper(domain, modulus);
  if (kernels::is_integer(value)) {
    const double r = std::round(value);
    return r >= lo && r < hi;
  }
  return value >= lo && value <= hi - 1.0;
}

void check_range(const BinaryPolynomial& poly, int value_width, EncodingDomain domain) {
  const std::size_t modulus = std::size_t{1} << value_width;
  const std::size_t keys = std::size_t{1} << poly.num_vars();
  for (std::size_t k = 0; k < keys; ++k) {
    const double v = poly.evaluate(k);
    if (!value_admissible(v, domain, modulus)) {
      std::ostringstream os;
      os.precision(17);
      os << "f(" << k << ") = " << v << " cannot be encoded in " << value_width
         << " value qubits ("
         << (domain == EncodingDomain::kUnsigned ? "unsigned" : "two's complement")
         << ")";
      throw RangeError(os.str());
    }
  }
}

double DictionaryState::key_probability(std::size_t key) const {
  const std::size_t m = layout.value_dimension();
  double p = 0.0;
  for (std::size_t v = 0; v < m; ++v) p += std::norm(state.amplitude(layout.combine(key, v)));
  return p;
}

std::vector<Complex> DictionaryState::value_slice(std::size_t key) const {
  const std::size_t m = layout.value_dimension();
  std::vector<Complex> slice(m);
  for (std::size_t v = 0; v < m; ++v) slice[v] = state.amplitude(layout.combine(key, v));
  const double norm = std::sqrt(key_probability(key));
  if (norm > 0.0) {
    for (Complex& a : slice) a /= norm;
  }
  return slice;
}

sim::Circuit build_F(const sim::RegisterLayout& layout, const BinaryPolynomial& poly,
                     const DictionaryOptions& opts) {
  if (poly.num_vars() != layout.key_width) {
    throw LayoutError("polynomial has " + std::to_string(poly.num_vars()) +
                      " variables but the key register has " +
                      std::to_string(layout.key_width) + " qubits");
  }
  check_range(poly, layout.value_width, opts.domain);

  const std::size_t modulus = layout.value_dimension();
  const sim::Register value = layout.value();
  sim::Circuit c(layout.num_qubits());
  if (opts.prepare_keys && layout.key_width > 0) c.append(sim::HadamardLayer{layout.key()});
  c.append(sim::HadamardLayer{value});
  // std::map iterates in mask order, which fixes the gate order.
  for (const auto& [subset, coef] : poly.terms()) {
    if (coef == 0.0) continue;
    c.append(sim::PhaseLadder{value, 2.0 * kPi * coef / double(modulus),
                              layout.key_qubit_mask(subset)});
  }
  c.append(sim::Qft{value, true});
  if (!opts.phase_correct) return c;

  // R_iota across both registers: e^{-i pi (M-1)/M (f(k) - v)} split into a
  // value ladder and one key-controlled phase per monomial.
  const double angle = encoding::correction_ladder_angle(modulus);
  c.append(sim::PhaseLadder{value, angle, 0});
  for (const auto& [subset, coef] : poly.terms()) {
    if (coef == 0.0) continue;
    c.append(sim::SubspacePhase{layout.key_qubit_mask(subset), -angle * coef});
  }
  // The monomial phases use f(k) itself; the encoded value is f(k) taken
  // mod M (f(k) + M for negative Two's Complement values, snapped for
  // integers). Correct the difference per key; e^{-i pi (M-1)} = -1.
  std::vector<double> residual(layout.key_dimension(), 0.0);
  bool any = false;
  for (std::size_t k = 0; k < residual.size(); ++k) {
    const double f = poly.evaluate(k);
    const double target = kernels::canonical_target(f, opts.domain, modulus);
    residual[k] = -angle * (target - f);
    any = any || residual[k] != 0.0;
  }
  if (any) {
    if (layout.key_width > 0) {
      c.append(sim::DiagonalPhase{layout.key(), std::move(residual)});
    } else {
      c.append(sim::SubspacePhase{0, residual[0]});
    }
  }
  return c;
}

namespace {

DictionaryState apply_dictionary(sim::StateVector state, const sim::RegisterLayout& layout,
                                 const BinaryPolynomial& poly, EncodingDomain domain,
                                 bool phase_correct) {
  if (state.num_qubits() != layout.num_qubits()) {
    throw LayoutError("state has " + std::to_string(state.num_qubits()) +
                      " qubits, layout needs " + std::to_string(layout.num_qubits()));
  }
  const auto amps = state.amplitudes();
  const bool from_zero = std::abs(amps[0] - Complex{1.0, 0.0}) < 1e-12;
  if (!from_zero) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (layout.split(i).second != 0 && std::abs(amps[i]) > 1e-12) {
        throw LayoutError("value register must start in |0>");
      }
    }
  }
  DictionaryOptions opts{domain, phase_correct, from_zero};
  build_F(layout, poly, opts).apply(state);
  return {layout, std::move(state)};
}

}  // namespace

DictionaryState apply_F(sim::StateVector state, const sim::RegisterLayout& layout,
                        const BinaryPolynomial& poly, EncodingDomain domain) {
  return apply_dictionary(std::move(state), layout, poly, domain, false);
}

DictionaryState apply_F_prime(sim::StateVector state, const sim::RegisterLayout& layout,
                              const BinaryPolynomial& poly, EncodingDomain domain) {
  return apply_dictionary(std::move(state), layout, poly, domain, true);
}

}  // namespace qai::dictionary
