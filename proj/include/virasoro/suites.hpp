#pragma once

#include "virasoro/laurent.hpp"
#include "virasoro/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace virasoro {

std::vector<std::string> available_suites();
/// Default selection for the verify command; excludes the deliberately
/// failing corrupted-cocycle fixture suite.
std::vector<std::string> default_suites();
bool suite_exists(const std::string& name);

SuiteResult run_suite(const std::string& name, const RunConfig& config);

/// Runs the selected invariant suites at the configured window and seed.
Report cmd_verify(const RunConfig& config);

struct OpeDeriveOptions {
  int order = 4;
  std::optional<std::string> monomial_top;
  bool check_only = false;
  std::optional<std::string> ope_path;
};

/// Derives the energy-momentum OPE from exchange symmetry and pins the
/// free coefficient; with a monomial top, emits the constraint system for
/// the higher-order probe without asserting an algebra.
Report cmd_ope_derive_tt(const RunConfig& config, const OpeDeriveOptions& options);

/// Diagonal-ansatz cohomology solve, optionally swept over a window range.
Report cmd_cocycle_solve(const RunConfig& config, std::optional<int> sweep_to);

/// One bracket cell computed three ways: structure constants, the central
/// extension, and the contour pairing through the canonical OPE.
Report cmd_bracket(int m, int n, const RunConfig& config);

/// Parses "c/2", "w", "3*w^2", "1/2*c*w" into a polynomial in w.
LaurentPoly parse_w_polynomial(const std::string& text);

}  // namespace virasoro
