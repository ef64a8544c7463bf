#pragma once

#include "virasoro/cochain.hpp"
#include "virasoro/witt.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace virasoro {

struct CocycleCheck {
  bool holds = true;
  long checked = 0;
  long skipped = 0;  // triples whose inner bracket leaves the window
  std::optional<std::array<int, 3>> counterexample;
};

/// Cyclic cocycle condition on every in-window basis triple.
CocycleCheck is_cocycle(const Cochain& omega);

/// Solves d(mu) = omega for a 1-cochain witness over the window; the input
/// must pass is_cocycle first. Nullopt when no witness exists.
std::optional<Cochain> is_coboundary(const Cochain& omega);

/// 2-cochain with omega(L_m, L_n) = f(m) delta_{m+n,0}.
Cochain diagonal_to_cochain(const DiagonalCocycle& diagonal);

struct CocycleSolveReport {
  int window = 0;
  long solution_dimension = 0;
  std::vector<std::map<int, Rational>> basis;  // each vector as m -> f(m), m > 0
  long coboundary_dimension = 0;
  long quotient_dimension = 0;
  std::map<int, Rational> normalized_representative;
};

/// Solves the cocycle condition within the diagonal ansatz
/// omega(L_m, L_n) = f(m) delta_{m+n,0} on a window of modes: exact
/// nullspace, the coboundary line f(m) = m inside it, the quotient
/// dimension, and the representative normalized to f(2) = 1/2 with
/// f(1) = 0. Windows below 4 are rejected as under-determined.
CocycleSolveReport diagonal_cocycle_solve(int window_bound);

struct ExtensionReport {
  Window window{0};
  std::map<std::pair<int, int>, VirasoroElement> table;
  JacobiResult jacobi;
};

/// Builds the windowed bracket table of the central extension attached to a
/// 2-cocycle and verifies the Jacobi identity on it. Non-cocycle input is
/// rejected, with the failing triple in the error text.
ExtensionReport build_central_extension(const DiagonalCocycle& omega, Window window);
ExtensionReport build_central_extension(const Cochain& omega, Window window);

/// Virasoro-type bracket where the central term comes from a general
/// 2-cochain; throws WindowExhaustion when a needed cell is undefined.
VirasoroElement virasoro_bracket(const VirasoroElement& x, const VirasoroElement& y,
                                 const Cochain& omega);

}  // namespace virasoro
