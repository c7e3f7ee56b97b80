#include "ycoupler/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ycoupler/descriptor.hpp"
#include "ycoupler/error.hpp"
#include "ycoupler/format.hpp"
#include "ycoupler/gallery.hpp"
#include "ycoupler/netlist_json.hpp"
#include "ycoupler/quantum.hpp"
#include "ycoupler/spectral.hpp"
#include "ycoupler/verify.hpp"

namespace ycoupler::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> tol;
  std::string output;

  std::string type;
  std::vector<std::string> params;
  bool serialize = false;

  std::string netlist;
  std::string arm1;
  std::string arm2;
  double kmin = 0.0;
  double kmax = 0.0;
  std::size_t points = 0;
  std::string method;

  std::size_t hom_points = 101;
};

double default_tolerance() {
  const char* env = std::getenv(kTolEnv);
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string(kTolEnv) + " must be a positive number, got '" + env + "'");
  }
  return v;
}

double tolerance(const Options& o) {
  if (o.tol) {
    if (!(*o.tol > 0.0)) throw UsageError("--tol must be positive");
    return *o.tol;
  }
  return default_tolerance();
}

spectral::SpectralArm parse_arm(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(std::string(flag) + " expects n,length");
  try {
    std::size_t used_n = 0;
    std::size_t used_l = 0;
    const std::string ns = text.substr(0, comma);
    const std::string ls = text.substr(comma + 1);
    const double n = std::stod(ns, &used_n);
    const double l = std::stod(ls, &used_l);
    if (used_n != ns.size() || used_l != ls.size()) throw std::invalid_argument(text);
    return {n, l};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects n,length, got '" + text + "'");
  }
}

nlohmann::json device_descriptor(const Options& o) {
  nlohmann::json d = {{"type", o.type}};
  for (const std::string& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    nlohmann::json value;
    try {
      value = nlohmann::json::parse(kv.substr(eq + 1));
    } catch (const nlohmann::json::parse_error&) {
      throw UsageError("--param " + key + ": value must be a number or JSON, got '" + kv.substr(eq + 1) + "'");
    }
    d[key] = value;
  }
  return d;
}

void print_symmetry(std::ostream& os, const ScatteringMatrix& s, double tol) {
  print_report(os, symmetry_report(s, tol));
}

void cmd_device(const Options& o, std::ostream& out) {
  const ScatteringMatrix s = device_from_descriptor(device_descriptor(o));
  const double tol = tolerance(o);
  if (o.serialize) {
    write_matrix(out, s);
    return;
  }
  out << "device " << o.type << " (" << s.dim() << " ports)\n";
  print_matrix(out, s);
  print_symmetry(out, s, tol);
}

void cmd_compose(const Options& o, std::ostream& out) {
  const double tol = tolerance(o);
  const network::Netlist n = network::load_netlist(o.netlist);
  const network::SolveReport rep = network::solve_steady_state(n, tol);
  if (o.serialize) {
    write_matrix(out, rep.effective);
    return;
  }
  out << "effective (" << rep.effective.dim() << (rep.effective.dim() == 1 ? " port:" : " ports:");
  for (const auto& e : n.externals) out << ' ' << network::to_string(e);
  out << ")\n";
  print_matrix(out, rep.effective);
  out << "condition_estimate=" << format_real(rep.condition_estimate) << '\n';
  out << "roundtrip_spectral_radius=" << format_real(rep.roundtrip_spectral_radius) << '\n';
  out << "dark_state_projected=" << (rep.dark_state_projected ? "true" : "false") << '\n';
  print_symmetry(out, rep.effective, tol);
}

void cmd_sweep(const Options& o, std::ostream& out) {
  const double tol = tolerance(o);
  const spectral::SpectralArm a1 = parse_arm(o.arm1, "--arm1");
  const spectral::SpectralArm a2 = parse_arm(o.arm2, "--arm2");
  const auto k = spectral::linear_k_grid(o.kmin, o.kmax, o.points);
  std::string method = o.method;
  if (method.empty()) method = o.netlist.empty() ? "closed" : "solver";
  spectral::SweepResult s;
  if (method == "closed") {
    s = spectral::sweep_resonator(a1, a2, k);
  } else {
    const network::Netlist n =
        o.netlist.empty() ? gallery::resonator_netlist({0.0, 0.0}) : network::load_netlist(o.netlist);
    s = spectral::sweep_netlist(n, a1, a2, k, tol);
  }
  spectral::write_csv(out, s);
}

void cmd_hom(const Options& o, std::ostream& out) {
  const auto grid = quantum::unit_grid(o.hom_points);
  out << "r_mag,probability\n";
  char buf[96];
  for (const auto& p : quantum::coincidence_probability_scan(grid)) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", p.r_mag, p.probability);
    out << buf;
  }
}

int cmd_verify(std::ostream& out) {
  const auto results = run_verification();
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " (deviation " << format_real(r.deviation)
        << ", bound " << format_real(r.bound) << ")\n";
    passed += r.passed;
  }
  out << passed << " passed, " << results.size() - passed << " failed\n";
  return passed == results.size() ? kExitOk : kExitComputation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering matrices and networks of directionally-unbiased Y-couplers", "ycoupler"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "symmetry/solver tolerance (default from YCOUPLER_TOL or 1e-10)");
    sub->add_option("-o,--output", o.output, "write results to this file instead of stdout");
  };

  auto* device = app.add_subcommand("device", "print a catalog device matrix and its symmetry report");
  device->add_option("--type", o.type, "device type")->required();
  device->add_option("-p,--param", o.params, "device parameter key=value (repeatable)");
  device->add_flag("--serialize", o.serialize, "print the exact text serialization instead");
  add_common(device);

  auto* compose = app.add_subcommand("compose", "solve a netlist for its effective scattering matrix");
  compose->add_option("--netlist", o.netlist, "netlist JSON file")->required()->check(CLI::ExistingFile);
  compose->add_flag("--serialize", o.serialize, "print the exact text serialization instead");
  add_common(compose);

  auto* sweep = app.add_subcommand("sweep", "tabulate resonator reflection/transmission over wavenumber");
  sweep->add_option("--netlist", o.netlist, "two-port netlist with links labeled arm1 and arm2")
      ->check(CLI::ExistingFile);
  sweep->add_option("--arm1", o.arm1, "refractive index and length of arm 1 as n,length")->required();
  sweep->add_option("--arm2", o.arm2, "refractive index and length of arm 2 as n,length")->required();
  sweep->add_option("--kmin", o.kmin, "smallest wavenumber (rad/m)")->required();
  sweep->add_option("--kmax", o.kmax, "largest wavenumber (rad/m)")->required();
  sweep->add_option("--points", o.points, "number of grid points")->required();
  sweep->add_option("--method", o.method, "closed (closed form) or solver (network solve)")
      ->check(CLI::IsMember({"closed", "solver"}));
  add_common(sweep);

  auto* hom = app.add_subcommand("hom", "two-photon coincidence probability versus splitter reflectivity");
  hom->add_option("--points", o.hom_points, "number of reflectivity grid points")->check(CLI::Range(2, 1000000));
  add_common(hom);

  auto* verify = app.add_subcommand("verify", "run the invariant battery");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ycoupler: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "ycoupler: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (app.got_subcommand(device)) cmd_device(o, *sink);
    if (app.got_subcommand(compose)) cmd_compose(o, *sink);
    if (app.got_subcommand(sweep)) cmd_sweep(o, *sink);
    if (app.got_subcommand(hom)) cmd_hom(o, *sink);
    if (app.got_subcommand(verify)) {
      (void)tolerance(o);
      return cmd_verify(*sink);
    }
  } catch (const UsageError& e) {
    err << "ycoupler: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NetlistError& e) {
    err << "ycoupler: " << e.what() << '\n';
    for (const auto& d : e.diagnostics()) err << "  " << d << '\n';
    return kExitComputation;
  } catch (const Error& e) {
    err << "ycoupler: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace ycoupler::cli
