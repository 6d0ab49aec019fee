// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpnormal/composite_spectrum.hpp"
#include "mpnormal/validation_oracle.hpp"

namespace mpnormal {

struct ProblemOptions {
  std::optional<std::pair<int, int>> n_window;
  std::optional<double> im_bound;
  double tol_kernel = kKernelTol;
  int grid_m = 256;
  FDScheme fd_scheme = FDScheme::Upwind;
  WitnessSign witness_sign = WitnessSign::Printed;
};

// Parsed problem description: endpoints, matrices as nested [re, im] arrays,
// and solver options. Parse failures surface as ConfigError with a JSON
// pointer or byte position.
struct ProblemConfig {
  MultipointProblem problem;
  ExtensionParams extension;
  ProblemOptions options;

  BranchWindow window() const;
};

ProblemConfig parse_config_text(const std::string& text);
ProblemConfig load_config_file(const std::string& path);
std::string config_to_json(const ProblemConfig& c);

// Bundled presets: scalar-periodic, scalar-phase, diag-2x2, example35-N4,
// example35-N16, injective-a1, unequal-kernel.
std::vector<std::string> preset_names();
ProblemConfig make_preset(const std::string& name);

// Report serialization.
std::string spectrum_to_json(const SpectrumResult& r);
std::string spectrum_to_csv(const SpectrumResult& r);
std::string plot_data(const SpectrumResult& r);
std::string normality_report_to_json(const NormalityReport& r);

}  // namespace mpnormal
