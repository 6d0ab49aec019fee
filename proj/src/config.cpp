// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/config.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace mpnormal {

namespace {

using nlohmann::json;

Matrix parse_matrix(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing matrix", "/" + key);
  const json& rows = j.at(key);
  if (!rows.is_array() || rows.empty()) {
    throw ConfigError("matrix must be a nonempty array of rows", "/" + key);
  }
  const int n = static_cast<int>(rows.size());
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[r];
    const std::string row_loc = "/" + key + "/" + std::to_string(r);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ConfigError("matrix row has wrong length (must be square)", row_loc);
    }
    for (int c = 0; c < n; ++c) {
      const json& cell = row[c];
      const std::string loc = row_loc + "/" + std::to_string(c);
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        throw ConfigError("matrix entry must be an [re, im] pair", loc);
      }
      m(r, c) = Complex{cell[0].get<double>(), cell[1].get<double>()};
    }
  }
  return m;
}

double parse_endpoint(const json& j, const std::string& key) {
  if (!j.contains("endpoints") || !j["endpoints"].contains(key) ||
      !j["endpoints"][key].is_number()) {
    throw ConfigError("missing numeric endpoint", "/endpoints/" + key);
  }
  return j["endpoints"][key].get<double>();
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ProblemConfig from_json(const json& j) {
  const double a1 = parse_endpoint(j, "a1");
  const double a2 = parse_endpoint(j, "a2");
  const double b2 = parse_endpoint(j, "b2");
  const double a3 = parse_endpoint(j, "a3");

  HermitianOperator A1(parse_matrix(j, "A1"), SignConstraint::NonPositive);
  HermitianOperator A2(parse_matrix(j, "A2"), SignConstraint::NonNegative);
  HermitianOperator A3(parse_matrix(j, "A3"), SignConstraint::NonNegative);
  UnitaryOperator W1(parse_matrix(j, "W1"));
  UnitaryOperator W2(parse_matrix(j, "W2"));

  ProblemOptions opts;
  if (j.contains("options")) {
    const json& o = j["options"];
    if (o.contains("n_min") != o.contains("n_max")) {
      throw ConfigError("n_min and n_max must be given together", "/options");
    }
    if (o.contains("n_min")) {
      opts.n_window = {o["n_min"].get<int>(), o["n_max"].get<int>()};
    }
    if (o.contains("im_bound")) opts.im_bound = o["im_bound"].get<double>();
    if (o.contains("tol_kernel")) opts.tol_kernel = o["tol_kernel"].get<double>();
    if (o.contains("grid_m")) opts.grid_m = o["grid_m"].get<int>();
    if (o.contains("fd_scheme")) {
      const std::string s = o["fd_scheme"].get<std::string>();
      if (s == "upwind") opts.fd_scheme = FDScheme::Upwind;
      else if (s == "central") opts.fd_scheme = FDScheme::Central;
      else throw ConfigError("fd_scheme must be 'upwind' or 'central'",
                             "/options/fd_scheme");
    }
    if (o.contains("witness_sign")) {
      const std::string s = o["witness_sign"].get<std::string>();
      if (s == "printed") opts.witness_sign = WitnessSign::Printed;
      else if (s == "decaying") opts.witness_sign = WitnessSign::Decaying;
      else throw ConfigError("witness_sign must be 'printed' or 'decaying'",
                             "/options/witness_sign");
    }
  }

  return ProblemConfig{
      MultipointProblem(a1, a2, b2, a3, std::move(A1), std::move(A2),
                        std::move(A3)),
      ExtensionParams{std::move(W1), std::move(W2)}, opts};
}

}  // namespace

BranchWindow ProblemConfig::window() const {
  if (options.n_window) {
    return BranchWindow::n_range(options.n_window->first,
                                 options.n_window->second);
  }
  if (options.im_bound) return BranchWindow::im_bound(*options.im_bound);
  return BranchWindow::default_for(problem.tau());
}

ProblemConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ConfigError(ex.what(), "byte " + std::to_string(ex.byte));
  }
  try {
    return from_json(j);
  } catch (const json::exception& ex) {
    throw ConfigError(ex.what(), "");
  }
}

ProblemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path, path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::string config_to_json(const ProblemConfig& c) {
  json j;
  j["schema_version"] = 1;
  j["endpoints"] = {{"a1", c.problem.a1},
                    {"a2", c.problem.a2},
                    {"b2", c.problem.b2},
                    {"a3", c.problem.a3}};
  j["A1"] = matrix_to_json(c.problem.A1.entries());
  j["A2"] = matrix_to_json(c.problem.A2.entries());
  j["A3"] = matrix_to_json(c.problem.A3.entries());
  j["W1"] = matrix_to_json(c.extension.W1.entries());
  j["W2"] = matrix_to_json(c.extension.W2.entries());
  json o;
  if (c.options.n_window) {
    o["n_min"] = c.options.n_window->first;
    o["n_max"] = c.options.n_window->second;
  }
  if (c.options.im_bound) o["im_bound"] = *c.options.im_bound;
  o["tol_kernel"] = c.options.tol_kernel;
  o["grid_m"] = c.options.grid_m;
  o["fd_scheme"] = c.options.fd_scheme == FDScheme::Upwind ? "upwind" : "central";
  o["witness_sign"] =
      c.options.witness_sign == WitnessSign::Printed ? "printed" : "decaying";
  j["options"] = std::move(o);
  return j.dump(2);
}

std::vector<std::string> preset_names() {
  return {"scalar-periodic", "scalar-phase",  "diag-2x2",      "example35-N4",
          "example35-N16",   "injective-a1",  "unequal-kernel"};
}

namespace {

Matrix scalar(Complex z) {
  Matrix m(1, 1);
  m(0, 0) = z;
  return m;
}

ProblemConfig scalar_preset(Complex a2_value, Complex w2_value) {
  MultipointProblem p(-1.0, 0.0, 1.0, 2.0,
                      HermitianOperator(scalar(0.0), SignConstraint::NonPositive),
                      HermitianOperator(scalar(a2_value), SignConstraint::NonNegative),
                      HermitianOperator(scalar(0.0), SignConstraint::NonNegative));
  ExtensionParams e{UnitaryOperator(scalar(1.0)), UnitaryOperator(scalar(w2_value))};
  return ProblemConfig{std::move(p), std::move(e), ProblemOptions{}};
}

}  // namespace

ProblemConfig make_preset(const std::string& name) {
  if (name == "scalar-periodic") return scalar_preset(0.0, 1.0);
  if (name == "scalar-phase") return scalar_preset(2.0, Complex{0.0, 1.0});
  if (name == "diag-2x2") {
    Matrix a1 = Matrix::Zero(2, 2), a2 = Matrix::Zero(2, 2),
           a3 = Matrix::Zero(2, 2), w1 = Matrix::Zero(2, 2);
    a1.diagonal() << Complex{-1.0, 0.0}, Complex{0.0, 0.0};
    a2.diagonal() << Complex{1.0, 0.0}, Complex{3.0, 0.0};
    a3.diagonal() << Complex{0.0, 0.0}, Complex{2.0, 0.0};
    w1(0, 1) = 1.0;  // swaps the A1 kernel mode onto the A3 kernel mode
    w1(1, 0) = 1.0;
    MultipointProblem p(-1.0, 0.0, 0.5, 1.5,
                        HermitianOperator(std::move(a1), SignConstraint::NonPositive),
                        HermitianOperator(std::move(a2), SignConstraint::NonNegative),
                        HermitianOperator(std::move(a3), SignConstraint::NonNegative));
    ExtensionParams e{UnitaryOperator(std::move(w1)),
                      UnitaryOperator(Matrix::Identity(2, 2))};
    return ProblemConfig{std::move(p), std::move(e), ProblemOptions{}};
  }
  if (name == "example35-N4" || name == "example35-N16") {
    auto [p, e] = build_example35(name == "example35-N4" ? 4 : 16, 0.0, 0.0);
    return ProblemConfig{std::move(p), std::move(e), ProblemOptions{}};
  }
  if (name == "injective-a1") {
    MultipointProblem p(-1.0, 0.0, 1.0, 2.0,
                        HermitianOperator(scalar(-1.0), SignConstraint::NonPositive),
                        HermitianOperator(scalar(1.0), SignConstraint::NonNegative),
                        HermitianOperator(scalar(0.0), SignConstraint::NonNegative));
    ExtensionParams e{UnitaryOperator(scalar(1.0)), UnitaryOperator(scalar(1.0))};
    return ProblemConfig{std::move(p), std::move(e), ProblemOptions{}};
  }
  if (name == "unequal-kernel") {
    Matrix a3 = Matrix::Zero(2, 2);
    a3.diagonal() << Complex{0.0, 0.0}, Complex{2.0, 0.0};
    MultipointProblem p(-1.0, 0.0, 1.0, 2.0,
                        HermitianOperator(Matrix::Zero(2, 2), SignConstraint::NonPositive),
                        HermitianOperator(Matrix::Identity(2, 2), SignConstraint::NonNegative),
                        HermitianOperator(std::move(a3), SignConstraint::NonNegative));
    ExtensionParams e{UnitaryOperator(Matrix::Identity(2, 2)),
                      UnitaryOperator(Matrix::Identity(2, 2))};
    return ProblemConfig{std::move(p), std::move(e), ProblemOptions{}};
  }
  throw ConfigError("unknown preset: " + name, "preset");
}

std::string spectrum_to_json(const SpectrumResult& r) {
  json j;
  j["schema_version"] = 1;
  json pts = json::array();
  for (const auto& ev : r.point) {
    pts.push_back({{"re", ev.lambda.real()},
                   {"im", ev.lambda.imag()},
                   {"n", ev.branch_n},
                   {"mu_re", ev.mu.real()},
                   {"mu_im", ev.mu.imag()},
                   {"residual", ev.residual}});
  }
  j["point"] = std::move(pts);
  j["continuous"] = r.continuous.to_string();
  j["residual"] = r.residual.to_string();
  j["provenance"] = {{"point", r.point_provenance},
                     {"continuous", r.continuous_provenance},
                     {"residual", r.residual_provenance}};
  json excl = json::array();
  for (Complex z : r.excluded_imaginary) excl.push_back({z.real(), z.imag()});
  j["excluded_imaginary"] = std::move(excl);
  return j.dump(2);
}

std::string spectrum_to_csv(const SpectrumResult& r) {
  std::ostringstream os;
  os << "re,im,n,mu_re,mu_im,residual\r\n";
  os << std::setprecision(17);
  for (const auto& ev : r.point) {
    os << ev.lambda.real() << ',' << ev.lambda.imag() << ',' << ev.branch_n
       << ',' << ev.mu.real() << ',' << ev.mu.imag() << ',' << ev.residual
       << "\r\n";
  }
  return os.str();
}

std::string plot_data(const SpectrumResult& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "# point spectrum scatter (re im), then one iR axis marker row\n";
  for (const auto& ev : r.point) {
    os << ev.lambda.real() << ' ' << ev.lambda.imag() << '\n';
  }
  os << "# axis: " << r.continuous.to_string() << '\n';
  os << 0.0 << ' ' << 0.0 << '\n';
  return os.str();
}

std::string normality_report_to_json(const NormalityReport& r) {
  json j;
  j["schema_version"] = 1;
  j["w1_unitary"] = r.w1_unitary;
  j["w1_residual"] = r.w1_residual;
  j["w2_unitary"] = r.w2_unitary;
  j["w2_residual"] = r.w2_residual;
  j["kernel_dims"] = {r.kernel_dim_a1, r.kernel_dim_a3};
  j["kernel_compatible"] = r.kernel_compatible;
  j["kernel_residual"] = r.kernel_residual;
  j["extension_exists"] = r.extension_exists;
  j["w2_a2_commutator"] = r.w2_a2_commutator;
  j["maximality_note"] = r.maximality_note;
  return j.dump(2);
}

}  // namespace mpnormal
