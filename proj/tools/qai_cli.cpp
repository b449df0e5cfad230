// qai: command-line front end for amplitude encodings, interpolation,
// dictionaries and weighted sums.
//
// Exit codes: 0 success, 1 repro failure, 2 usage/config error,
// 3 domain/range error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qai/dictionary.hpp"
#include "qai/encoding.hpp"
#include "qai/error.hpp"
#include "qai/kernels.hpp"
#include "qai/patterns.hpp"
#include "qai/viz/config.hpp"
#include "qai/viz/io.hpp"
#include "qai/viz/repro.hpp"
#include "qai/viz/svg.hpp"

namespace {

using qai::kernels::EncodingDomain;

constexpr int kExitOk = 0;
constexpr int kExitReproFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qai::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qai::ParseError("cannot write " + path);
  out << text;
}

std::string render(const qai::viz::StateDump& dump, const std::string& format,
                   const std::string& title) {
  if (format == "json") return qai::viz::to_json(dump);
  return qai::viz::render_svg(qai::viz::chart_from_dump(dump, title));
}

EncodingDomain domain_of(bool twos) {
  return twos ? EncodingDomain::kTwosComplement : EncodingDomain::kUnsigned;
}

// start:stop:step, stop inclusive within half a step.
std::vector<double> parse_sweep(const std::string& spec) {
  const auto parts = qai::viz::parse_real_list([&] {
    std::string s = spec;
    for (char& c : s) c = c == ':' ? ',' : c;
    return s;
  }());
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw qai::ParseError("sweep must be start:stop:step with step > 0 and stop >= start");
  }
  std::vector<double> ts;
  for (long i = 0;; ++i) {
    const double t = parts[0] + double(i) * parts[2];
    if (t > parts[1] + 0.5 * parts[2] * 1e-9 || ts.size() > 1000000) break;
    ts.push_back(t);
  }
  return ts;
}

struct EncodeArgs {
  int m = 3;
  double t = 0.0;
  bool twos = false;
  bool phase_correct = false;
  std::string out = "svg";
  std::string path;
};

int cmd_encode(const EncodeArgs& a) {
  const EncodingDomain domain = domain_of(a.twos);
  qai::sim::StateVector state = qai::encoding::encode_value(a.m, a.t, domain);
  if (a.phase_correct) qai::encoding::phase_correction_scalar(state, a.m, a.t, domain);
  std::ostringstream title;
  title << (a.phase_correct ? "iota" : "phi") << "  m=" << a.m << "  t=" << a.t;
  write_output(a.path, render(qai::viz::make_dump(state), a.out, title.str()));
  return kExitOk;
}

struct InterpolateArgs {
  std::string source = "nu2";
  std::string table;
  int m = 6;
  std::optional<double> t;
  std::string sweep;
  std::string csv;
  bool twos = false;
};

int cmd_interpolate(const InterpolateArgs& a) {
  const EncodingDomain domain = domain_of(a.twos);
  qai::sim::Circuit prep(1);
  std::vector<double> amplitudes;
  int m = a.m;
  std::function<std::optional<double>(double)> exact = [](double) {
    return std::optional<double>{};
  };
  if (a.source == "nu2") {
    amplitudes = qai::patterns::nu2_amplitudes(m);
    exact = [m](double t) { return std::optional<double>(qai::patterns::nu2_value(m, t)); };
  } else if (a.source == "lambda") {
    amplitudes = qai::patterns::lambda_amplitudes(m);
    exact = [m](double t) { return std::optional<double>(qai::patterns::lambda_value(m, t)); };
  } else if (a.source == "table") {
    if (a.table.empty()) throw qai::ParseError("--source table needs --table FILE");
    std::string text = read_file(a.table);
    for (char& c : text) c = (c == '\n' || c == '\r' || c == ' ' || c == '\t') ? ',' : c;
    std::string cleaned;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == ',' && (cleaned.empty() || cleaned.back() == ',')) continue;
      cleaned += text[i];
    }
    if (!cleaned.empty() && cleaned.back() == ',') cleaned.pop_back();
    const auto spec =
        qai::patterns::WeightSpec::from_weights(qai::viz::parse_real_list(cleaned));
    amplitudes = spec.amplitudes;
    m = spec.width();
    exact = [amplitudes](double t) {
      if (!qai::kernels::is_integer(t)) return std::optional<double>{};
      const auto k = std::size_t(std::llround(t)) % amplitudes.size();
      return std::optional<double>(amplitudes[k]);
    };
  } else {
    throw qai::ParseError("unknown source '" + a.source + "' (nu2, lambda, table)");
  }
  prep = qai::patterns::prepare_amplitudes(std::span<const double>(amplitudes));

  std::vector<double> ts;
  if (!a.sweep.empty()) {
    ts = parse_sweep(a.sweep);
  } else if (a.t) {
    ts.push_back(*a.t);
  } else {
    throw qai::ParseError("give -t or --sweep");
  }

  std::vector<qai::viz::SweepRow> rows;
  for (double t : ts) {
    const auto r = qai::patterns::quantum_interpolate(prep, t, domain);
    rows.push_back({t, r.quantum_value, r.classical_value, exact(t)});
  }
  if (!a.csv.empty()) {
    std::ostringstream os;
    qai::viz::write_sweep_csv(os, rows);
    write_output(a.csv, os.str());
    return kExitOk;
  }
  std::printf("%-12s %-14s %-14s %s\n", "t", "quantum", "classical", "exact");
  for (const auto& r : rows) {
    if (r.exact) {
      std::printf("%-12.6g %-14.10f %-14.10f %.10f\n", r.t, r.quantum, r.classical, *r.exact);
    } else {
      std::printf("%-12.6g %-14.10f %-14.10f -\n", r.t, r.quantum, r.classical);
    }
  }
  return kExitOk;
}

struct DictArgs {
  std::string poly_file;
  int n = 2;
  int m = 3;
  bool prime = false;
  bool twos = false;
  std::string order = "lsb";
  std::string out = "svg";
  std::string path;
};

int cmd_dict(const DictArgs& a) {
  const auto order = a.order == "msb" ? qai::dictionary::VariableOrder::kMsbFirst
                                      : qai::dictionary::VariableOrder::kLsbFirst;
  const auto poly = qai::dictionary::parse_polynomial(read_file(a.poly_file), a.n, order);
  const qai::sim::RegisterLayout layout{a.n, a.m};
  const EncodingDomain domain = domain_of(a.twos);
  const qai::sim::StateVector zero(layout.num_qubits());
  const auto dict = a.prime ? qai::dictionary::apply_F_prime(zero, layout, poly, domain)
                            : qai::dictionary::apply_F(zero, layout, poly, domain);
  const std::string title = std::string(a.prime ? "F'" : "F") + "  " +
                            qai::dictionary::format_polynomial(poly);
  write_output(a.path, render(qai::viz::make_dump(dict.state, layout), a.out, title));
  return kExitOk;
}

int cmd_sum(const std::string& config_path) {
  const auto config = qai::viz::load_sum_config(config_path);
  const auto report = qai::viz::run_sum(config);
  std::printf("E_|0>      %.10f\n", report.amplitude);
  std::printf("estimate   %.10f\n", report.estimate);
  std::printf("classical  %.10f\n", report.classical);
  std::printf("abs_error  %.10f\n", report.abs_error);
  return kExitOk;
}

int cmd_repro(const std::string& filter) {
  const auto rows = qai::viz::run_repro(filter);
  if (rows.empty()) {
    std::fprintf(stderr, "no repro case matches '%s'\n", filter.c_str());
    return kExitUsage;
  }
  std::cout << qai::viz::format_report(rows);
  for (const auto& r : rows) {
    if (!r.pass) return kExitReproFail;
  }
  return kExitOk;
}

int cmd_render(const std::string& dump_path, const std::string& out_path) {
  const auto dump = qai::viz::dump_from_json(read_file(dump_path));
  write_output(out_path, qai::viz::render_svg(dump));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amplitude encoding, interpolation and dictionary simulator"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Encode a real t into m qubits");
  encode->add_option("-m", enc.m, "Register width")->check(CLI::Range(1, 24));
  encode->add_option("-t", enc.t, "Target value")->required();
  encode->add_flag("--twos", enc.twos, "Two's complement domain [-M/2, M/2)");
  encode->add_flag("--phase-correct", enc.phase_correct, "Apply R_iota (real amplitudes)");
  encode->add_option("--out", enc.out, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  encode->add_option("-o,--output", enc.path, "Output file (default stdout)");

  InterpolateArgs interp;
  auto* interpolate = app.add_subcommand("interpolate", "Amplitude interpolation");
  interpolate->add_option("--source", interp.source, "nu2, lambda or table");
  interpolate->add_option("--table", interp.table, "Whitespace/comma separated samples");
  interpolate->add_option("-m", interp.m, "Register width")->check(CLI::Range(1, 24));
  interpolate->add_option("-t", interp.t, "Point to interpolate");
  interpolate->add_option("--sweep", interp.sweep, "start:stop:step");
  interpolate->add_option("--csv", interp.csv, "Write CSV to file ('-' for stdout)");
  interpolate->add_flag("--twos", interp.twos, "Two's complement domain");

  DictArgs dict;
  auto* dictionary = app.add_subcommand("dict", "Build a dictionary state with F or F'");
  dictionary->add_option("poly", dict.poly_file, "Polynomial file")->required();
  dictionary->add_option("-n", dict.n, "Key qubits")->check(CLI::Range(0, 23));
  dictionary->add_option("-m", dict.m, "Value qubits")->check(CLI::Range(1, 24));
  dictionary->add_flag("--prime", dict.prime, "Use the phase-corrected F'");
  dictionary->add_flag("--twos", dict.twos, "Two's complement values");
  dictionary->add_option("--order", dict.order, "Variable order")
      ->check(CLI::IsMember({"lsb", "msb"}));
  dictionary->add_option("--out", dict.out, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  dictionary->add_option("-o,--output", dict.path, "Output file (default stdout)");

  std::string sum_config;
  auto* sum = app.add_subcommand("sum", "Weighted sum from a config file");
  sum->add_option("config", sum_config, "Config file")->required();

  std::string filter;
  auto* repro = app.add_subcommand("repro", "Regenerate the reference numbers");
  repro->add_option("--filter", filter, "Case id glob, e.g. 'encode*'");

  std::string dump_path;
  std::string render_out;
  auto* rend = app.add_subcommand("render", "Render a JSON state dump as SVG");
  rend->add_option("dump", dump_path, "JSON dump")->required();
  rend->add_option("-o,--output", render_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*encode) return cmd_encode(enc);
    if (*interpolate) return cmd_interpolate(interp);
    if (*dictionary) return cmd_dict(dict);
    if (*sum) return cmd_sum(sum_config);
    if (*repro) return cmd_repro(filter);
    if (*rend) return cmd_render(dump_path, render_out);
  } catch (const qai::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const qai::RangeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const qai::IndexError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
