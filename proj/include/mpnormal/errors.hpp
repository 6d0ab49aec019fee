// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mpnormal {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input fails a structural invariant (non-Hermitian entries, bad tags, ...).
struct ValidationError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Exponent magnitudes outside the representable range.
struct RangeError : Error {
  using Error::Error;
};

// A half-line pairing whose integrand does not decay.
struct IntegrabilityError : Error {
  using Error::Error;
};

struct PrecisionLossError : Error {
  using Error::Error;
};

// Resolvent requested within the near-singular neighborhood of the spectrum.
struct NearSingularError : Error {
  NearSingularError(const std::string& msg, std::complex<double> mu_, int branch_)
      : Error(msg), mu(mu_), branch(branch_) {}
  std::complex<double> mu;
  int branch = 0;
};

// Config file problems; `location` is a JSON pointer or byte position.
struct ConfigError : Error {
  ConfigError(const std::string& msg, std::string location_)
      : Error(msg), location(std::move(location_)) {}
  std::string location;
};

}  // namespace mpnormal
