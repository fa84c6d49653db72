/// @file  main.cpp
/// @brief Command-line driver: runs verification suites and the sample demo.

#include "hamrep/repops.hpp"
#include "hamrep/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using hamrep::SuiteConfig;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

hamrep::TimeBasis parse_time_basis(const std::string& s) {
  if (s == "momentum_time") return hamrep::TimeBasis::MomentumTime;
  if (s == "position_time") return hamrep::TimeBasis::PositionTime;
  throw hamrep::Error("unknown time_basis: " + s);
}

hamrep::InternalBasis parse_internal_basis(const std::string& s) {
  if (s == "force_diag") return hamrep::InternalBasis::ForceDiag;
  if (s == "velocity_diag") return hamrep::InternalBasis::VelocityDiag;
  throw hamrep::Error("unknown internal_basis: " + s);
}

/// Applies a JSON config file (same shape as the report's "config" block)
/// to fields the command line did not set.
void apply_config_file(const json& j, const CLI::App& cmd, SuiteConfig& cfg,
                       std::vector<std::string>& suites,
                       std::string& format) {
  auto unset = [&](const std::string& flag) {
    return cmd.count(flag) == 0;
  };
  if (unset("--n") && j.contains("n")) cfg.n = j.at("n").get<int>();
  if (unset("--trials") && j.contains("trials"))
    cfg.trials = j.at("trials").get<int>();
  if (unset("--seed") && j.contains("seed"))
    cfg.seed = j.at("seed").get<unsigned>();
  if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
  if (j.contains("tol_matrix"))
    cfg.tol_matrix = j.at("tol_matrix").get<double>();
  if (unset("--suite") && j.contains("suites"))
    suites = j.at("suites").get<std::vector<std::string>>();
  if (unset("--family") && j.contains("families"))
    cfg.families = j.at("families").get<std::vector<std::string>>();
  if (unset("--format") && j.contains("format"))
    format = j.at("format").get<std::string>();
  if (j.contains("labels")) {
    const json& l = j.at("labels");
    auto dbl = [&](const char* k, double& out) {
      if (l.contains(k)) out = l.at(k).get<double>();
    };
    dbl("lambda", cfg.labels.lambda);
    dbl("mu", cfg.labels.mu);
    dbl("alpha", cfg.labels.alpha);
    dbl("kappa", cfg.labels.kappa);
    dbl("hbar", cfg.labels.hbar);
    dbl("galilei_eps", cfg.labels.galilei_eps);
    if (l.contains("two_j")) cfg.labels.two_j = l.at("two_j").get<int>();
    if (l.contains("time_basis"))
      cfg.labels.time_basis =
          parse_time_basis(l.at("time_basis").get<std::string>());
    if (l.contains("internal_basis"))
      cfg.labels.internal_basis =
          parse_internal_basis(l.at("internal_basis").get<std::string>());
  }
}

void print_text_report(std::ostream& os,
                       const std::vector<hamrep::SuiteResult>& suites) {
  bool all = true;
  for (const auto& s : suites) {
    os << "suite " << s.name << ": " << (s.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : s.checks) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (c.max_dev > 0) os << "  max_dev=" << c.max_dev;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << "\n";
    }
    for (const auto& note : s.notes) os << "  note: " << note << "\n";
    all = all && s.pass;
  }
  os << (all ? "ALL SUITES PASSED" : "SOME SUITES FAILED") << "\n";
}

int run_verify(const CLI::App& cmd, SuiteConfig cfg,
               std::vector<std::string> suites, const std::string& labels_file,
               std::string format, const std::string& out_path) {
  if (!labels_file.empty()) {
    std::ifstream in(labels_file);
    if (!in) {
      std::cerr << "error: cannot open config file " << labels_file << "\n";
      return kExitConfig;
    }
    json j;
    try {
      in >> j;
      apply_config_file(j, cmd, cfg, suites, format);
    } catch (const std::exception& e) {
      std::cerr << "error: bad config file: " << e.what() << "\n";
      return kExitConfig;
    }
  }
  if (format != "json" && format != "text") {
    std::cerr << "error: format must be json or text\n";
    return kExitConfig;
  }
  std::vector<std::string> names;
  try {
    cfg.validate();
    if (suites.empty()) {
      names = hamrep::all_suite_names();
    } else {
      for (const auto& s : suites) names.push_back(hamrep::canonical_suite_name(s));
      std::sort(names.begin(), names.end());
      names.erase(std::unique(names.begin(), names.end()), names.end());
    }
  } catch (const hamrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::vector<hamrep::SuiteResult> results;
  bool all = true;
  for (const auto& name : names) {
    results.push_back(hamrep::run_suite(name, cfg));
    all = all && results.back().pass;
  }

  std::ostringstream body;
  if (format == "json")
    body << hamrep::report_to_json(results, cfg).dump(2) << "\n";
  else
    print_text_report(body, results);

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitConfig;
    }
    out << body.str();
  }
  return all ? kExitPass : kExitFail;
}

/// Parses "lo:hi:count"; throws Error on malformed input.
struct Range {
  double lo = 0, hi = 0;
  int count = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.count) || c1 != ':' ||
      c2 != ':' || !(in >> std::ws).eof() || r.count < 1)
    throw hamrep::Error("bad grid range: " + s);
  return r;
}

int run_demo(const std::string& grid_spec, const std::string& transform_file,
             const std::string& out_path) {
  hamrep::QuadPhaseOperator u(1);
  try {
    const auto comma = grid_spec.find(',');
    if (comma == std::string::npos)
      throw hamrep::Error("grid must be XRANGE,TRANGE");
    const Range xr = parse_range(grid_spec.substr(0, comma));
    const Range tr = parse_range(grid_spec.substr(comma + 1));

    if (!transform_file.empty()) {
      std::ifstream in(transform_file);
      if (!in)
        throw hamrep::Error("cannot open transform file " + transform_file);
      json j;
      in >> j;
      u = hamrep::quadphase_from_json(j);
      if (u.n != 1) throw hamrep::Error("demo transform must have n = 1");
    }

    std::vector<std::pair<Eigen::VectorXd, double>> grid;
    for (int a = 0; a < xr.count; ++a)
      for (int b = 0; b < tr.count; ++b) {
        Eigen::VectorXd x(1);
        x(0) = xr.count == 1
                   ? xr.lo
                   : xr.lo + (xr.hi - xr.lo) * a / (xr.count - 1);
        const double t =
            tr.count == 1 ? tr.lo
                          : tr.lo + (tr.hi - tr.lo) * b / (tr.count - 1);
        grid.emplace_back(x, t);
      }

    // Unit-width Gaussian wavepacket, time-independent analytic source.
    auto packet = [](const Eigen::VectorXd& x, double) {
      return std::complex<double>(
          std::pow(M_PI, -0.25) * std::exp(-0.5 * x(0) * x(0)), 0.0);
    };
    const auto values = hamrep::apply_to_samples(u, packet, grid);

    std::ostringstream body;
    body << "x,t,re,im,abs2\n";
    body.precision(12);
    for (size_t i = 0; i < grid.size(); ++i)
      body << grid[i].first(0) << "," << grid[i].second << ","
           << values[i].real() << "," << values[i].imag() << ","
           << std::norm(values[i]) << "\n";
    if (out_path.empty()) {
      std::cout << body.str();
    } else {
      std::ofstream out(out_path);
      if (!out) throw hamrep::Error("cannot write " + out_path);
      out << body.str();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamrep: verification toolkit for the Weyl-Heisenberg, "
               "Hamilton, Galilei and quantum Hamilton groups"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::vector<std::string> suites;
  std::string labels_file, format = "text", out_path;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites,
                     "suite name (repeatable; default: all)");
  verify->add_option("--n", cfg.n, "space dimension for configurable suites");
  verify->add_option("--trials", cfg.trials, "seeded trials per property");
  verify->add_option("--seed", cfg.seed, "base RNG seed");
  verify->add_option("--family", cfg.families,
                     "restrict uir-homomorphism families (h|ha|ga|qha)");
  verify->add_option("--labels", labels_file,
                     "JSON config file (flags take precedence)");
  verify->add_option("--format", format, "json or text");
  verify->add_option("--out", out_path, "write report to file");

  std::string grid_spec, transform_file, demo_out;
  CLI::App* demo =
      app.add_subcommand("demo", "sample a transformed Gaussian wavepacket");
  demo->add_option("--grid", grid_spec,
                   "grid spec lo:hi:count,lo:hi:count (space, time)")
      ->required();
  demo->add_option("--transform", transform_file,
                   "JSON operator file (default: identity)");
  demo->add_option("--out", demo_out, "write CSV to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (verify->parsed())
      return run_verify(*verify, cfg, suites, labels_file, format, out_path);
    return run_demo(grid_spec, transform_file, demo_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
