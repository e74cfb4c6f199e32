#pragma once

#include <stdexcept>
#include <string>

namespace iham {

/// Bad command-line usage: unknown subcommand or case name, missing or
/// malformed flags/parameters. Maps to process exit code 1.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure at run time: iterative solver non-convergence,
/// quadrature non-convergence, zero pivot. Maps to process exit code 2.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem data that fails validation: interface outside the domain,
/// non-positive diffusion coefficient, out-of-range tolerances, malformed
/// config files. Maps to process exit code 3.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace iham
