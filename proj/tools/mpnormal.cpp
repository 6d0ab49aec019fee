// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <json.hpp>

#include "mpnormal/composite_spectrum.hpp"
#include "mpnormal/config.hpp"
#include "mpnormal/validation_oracle.hpp"

namespace {

using namespace mpnormal;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;

struct CommonArgs {
  std::string config_path;
  std::string preset;
  std::optional<int> n_window;
  std::optional<double> im_bound;
  std::optional<int> grid_m;
  std::optional<double> tol;
};

void add_common(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--config", args->config_path, "JSON problem config file");
  cmd->add_option("--preset", args->preset, "bundled preset name");
  cmd->add_option("--n-window", args->n_window,
                  "branch window n in [-N, N]");
  cmd->add_option("--im-bound", args->im_bound, "branch window |Im lambda| <= X");
  cmd->add_option("--grid", args->grid_m, "finite-difference oracle grid size");
  cmd->add_option("--tol", args->tol, "kernel tolerance");
}

ProblemConfig resolve_config(const CommonArgs& args) {
  if (args.config_path.empty() == args.preset.empty()) {
    throw ConfigError("exactly one of --config or --preset is required", "cli");
  }
  ProblemConfig c = args.preset.empty() ? load_config_file(args.config_path)
                                        : make_preset(args.preset);
  if (args.n_window) c.options.n_window = {-*args.n_window, *args.n_window};
  if (args.im_bound) {
    c.options.im_bound = *args.im_bound;
    c.options.n_window.reset();
  }
  if (args.grid_m) c.options.grid_m = *args.grid_m;
  if (args.tol) c.options.tol_kernel = *args.tol;
  return c;
}

void emit_error(const std::string& kind, const std::string& message,
                const std::string& location = "") {
  json j{{"error", kind}, {"message", message}};
  if (!location.empty()) j["location"] = location;
  std::cerr << j.dump() << std::endl;
}

int cmd_validate(const CommonArgs& args) {
  const ProblemConfig c = resolve_config(args);
  const NormalityReport rep =
      validate_extension(c.problem, c.extension, c.options.tol_kernel);
  std::cout << normality_report_to_json(rep) << std::endl;
  return rep.extension_exists ? kExitOk : kExitFail;
}

int cmd_spectrum(const CommonArgs& args, const std::string& format,
                 const std::string& plot_path) {
  const ProblemConfig c = resolve_config(args);
  const SpectrumResult r = full_spectrum(c.problem, c.extension, c.window());
  if (format == "csv") std::cout << spectrum_to_csv(r);
  else std::cout << spectrum_to_json(r) << std::endl;
  if (!plot_path.empty()) {
    std::ofstream out(plot_path);
    if (!out) {
      emit_error("io", "cannot write plot data file: " + plot_path);
      return kExitFail;
    }
    out << plot_data(r);
  }
  return kExitOk;
}

struct SuiteResult {
  bool pass = true;
  void check(const std::string& name, bool ok, double measured,
             double threshold) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (measured " << measured
              << ", limit " << threshold << ")\n";
    pass = pass && ok;
  }
};

void run_green_suite(const ProblemConfig& c, SuiteResult& out) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> rate(0.1, 5.0);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const int dim = c.problem.dim();
  auto random_vec = [&] {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Complex{coeff(rng), coeff(rng)};
    return v;
  };
  auto random_pair = [&] {
    TestFunction l(IntervalTag::Left, c.problem.a1,
                   {{Complex{rate(rng), coeff(rng)}, random_vec()}});
    TestFunction r(IntervalTag::Right, c.problem.a3,
                   {{Complex{-rate(rng), coeff(rng)}, random_vec()}});
    return HalflinePair{std::move(l), std::move(r)};
  };
  double worst_green = 0.0;
  double worst_interval = 0.0;
  for (int i = 0; i < 100; ++i) {
    worst_green = std::max(
        worst_green, std::abs(green_identity_residual(random_pair(), random_pair())));
    TestFunction u(IntervalTag::Middle, c.problem.a2,
                   {{Complex{coeff(rng), coeff(rng)}, random_vec()}},
                   c.problem.b2);
    TestFunction v(IntervalTag::Middle, c.problem.a2,
                   {{Complex{coeff(rng), coeff(rng)}, random_vec()}},
                   c.problem.b2);
    worst_interval =
        std::max(worst_interval, std::abs(green_identity_residual_interval(u, v)));
  }
  double worst_roundtrip = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Vector f = random_vec();
    const Vector g = random_vec();
    const HalflinePair w = surjectivity_witness(f, g, c.problem.a1, c.problem.a3);
    const BoundaryPair y = boundary_maps_halfline(w.first, w.second);
    worst_roundtrip = std::max(
        worst_roundtrip,
        std::max((y.gamma1 - f).norm(), (y.gamma2 - g).norm()));
  }
  out.check("green-identity-halfline", worst_green <= 1e-10, worst_green, 1e-10);
  out.check("green-identity-interval", worst_interval <= 1e-10, worst_interval,
            1e-10);
  out.check("surjectivity-roundtrip", worst_roundtrip <= 1e-13, worst_roundtrip,
            1e-13);
}

void run_oracle_suite(const ProblemConfig& c, SuiteResult& out) {
  const int m = c.options.grid_m;
  const double tau = c.problem.tau();
  const FDEigenResult fd = fd_interval_eigenvalues(
      c.problem, c.extension.W2, m, c.options.fd_scheme, /*estimate_order=*/true);
  const double resolvable = 0.2 * m / tau;
  const double bound = std::min(c.options.im_bound.value_or(resolvable), resolvable);
  const auto analytic = interval_eigenvalues(c.problem, c.extension.W2,
                                             BranchWindow::im_bound(bound));
  std::vector<Complex> lam;
  for (const auto& ev : analytic) lam.push_back(ev.lambda);
  const double err = max_relative_match_error(lam, fd.eigenvalues);
  out.check("fd-oracle-match", err <= 5e-3, err, 5e-3);
  if (std::isfinite(fd.order_estimate)) {
    out.check("fd-order-estimate", fd.order_estimate >= 0.5 && fd.order_estimate <= 3.0,
              fd.order_estimate, 3.0);
  }
}

void run_halfline_suite(const ProblemConfig& c, SuiteResult& out) {
  const HalflineSpectrumResult r =
      full_halfline_spectrum(c.problem, c.extension, 200);
  out.check("point-spectrum-empty-certificate", r.certificate_pass,
            static_cast<double>(r.certificate_samples), 200);

  const auto w = nonsurjectivity_witness(c.problem, c.extension, 1.0,
                                         {1.0, 2.0, 4.0, 8.0},
                                         c.options.witness_sign);
  bool increasing = true;
  for (std::size_t i = 1; i < w.truncated_norms.size(); ++i) {
    increasing = increasing &&
                 w.truncated_norms[i].second > w.truncated_norms[i - 1].second;
  }
  out.check("witness-strictly-increasing", increasing, increasing ? 1.0 : 0.0, 1.0);

  const double closed = witness_integral(5.0, c.options.witness_sign);
  const double quad = quadrature(
      [&](double t) {
        return witness_integrand(t, c.problem.a1, c.options.witness_sign);
      },
      c.problem.a1 - 5.0, c.problem.a1);
  const double rel = std::abs(quad - closed) / closed;
  out.check("witness-quadrature-vs-closed-form", rel <= 1e-6, rel, 1e-6);
}

int cmd_verify(const CommonArgs& args, const std::string& suite) {
  const ProblemConfig c = resolve_config(args);
  SuiteResult out;
  if (suite == "green" || suite == "all") run_green_suite(c, out);
  if (suite == "oracle" || suite == "all") run_oracle_suite(c, out);
  if (suite == "halfline" || suite == "all") run_halfline_suite(c, out);
  std::cout << (out.pass ? "ALL PASS" : "FAILURES") << std::endl;
  return out.pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal multipoint extension spectra"};
  app.require_subcommand(1);

  CommonArgs validate_args, spectrum_args, verify_args;
  std::string format = "json";
  std::string plot_path;
  std::string suite = "all";

  CLI::App* validate = app.add_subcommand("validate", "check extension parameters");
  add_common(validate, &validate_args);

  CLI::App* spectrum = app.add_subcommand("spectrum", "compute the spectrum");
  add_common(spectrum, &spectrum_args);
  spectrum->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_option("--plot-data", plot_path, "write (re, im) scatter file");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, &verify_args);
  verify->add_option("--suite", suite, "green|oracle|halfline|all")
      ->check(CLI::IsMember({"green", "oracle", "halfline", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_args);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_args, format, plot_path);
    if (verify->parsed()) return cmd_verify(verify_args, suite);
  } catch (const ConfigError& e) {
    emit_error("config", e.what(), e.location);
    return kExitParse;
  } catch (const NearSingularError& e) {
    emit_error("near-singular", e.what());
    return kExitFail;
  } catch (const PrecisionLossError& e) {
    emit_error("precision-loss", e.what());
    return kExitFail;
  } catch (const Error& e) {
    emit_error("validation", e.what());
    return kExitFail;
  }
  return kExitParse;
}
