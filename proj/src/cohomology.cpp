#include "virasoro/cohomology.hpp"

#include "virasoro/errors.hpp"
#include "virasoro/linsolve.hpp"

#include <string>

namespace virasoro {

namespace {

// omega([L_m, L_n], L_p) + omega([L_n, L_p], L_m) + omega([L_p, L_m], L_n),
// nullopt when any term reads an undefined cell.
std::optional<CentralScalar> cyclic_sum(const Cochain& omega, int m, int n, int p) {
  CentralScalar total;
  const std::array<std::array<int, 3>, 3> order = {{{m, n, p}, {n, p, m}, {p, m, n}}};
  for (const auto& [a, b, rest] : order) {
    const auto cell = omega.value({a + b, rest});
    if (!cell.has_value()) {
      return std::nullopt;
    }
    total += cell->scaled(Rational(a - b));
  }
  return total;
}

}  // namespace

namespace {

int triple_radius(const std::array<int, 3>& triple) {
  return std::max({std::abs(triple[0]), std::abs(triple[1]), std::abs(triple[2])});
}

// Prefers small counterexamples: least radius, then lexicographic.
void offer_counterexample(std::optional<std::array<int, 3>>& best,
                          const std::array<int, 3>& candidate) {
  if (!best.has_value() || triple_radius(candidate) < triple_radius(*best) ||
      (triple_radius(candidate) == triple_radius(*best) && candidate < *best)) {
    best = candidate;
  }
}

}  // namespace

CocycleCheck is_cocycle(const Cochain& omega) {
  if (omega.degree() != 2) {
    throw InvalidInput("cocycle condition applies to 2-cochains");
  }
  CocycleCheck result;
  const int bound = omega.window().bound();
  for (int m = -bound; m <= bound; ++m) {
    for (int n = m + 1; n <= bound; ++n) {
      for (int p = n + 1; p <= bound; ++p) {
        const auto total = cyclic_sum(omega, m, n, p);
        if (!total.has_value()) {
          ++result.skipped;
          continue;
        }
        ++result.checked;
        if (!total->is_zero()) {
          result.holds = false;
          offer_counterexample(result.counterexample, {m, n, p});
        }
      }
    }
  }
  return result;
}

std::optional<Cochain> is_coboundary(const Cochain& omega) {
  const CocycleCheck cocycle = is_cocycle(omega);
  if (!cocycle.holds) {
    throw InvalidInput("is_coboundary needs a cocycle input");
  }
  const int bound = omega.window().bound();
  const int columns = 2 * bound + 1;  // mu(L_n) for n in [-bound, bound]
  std::vector<LinearRow> rows;
  for (int m = -bound; m <= bound; ++m) {
    for (int n = m + 1; n <= bound; ++n) {
      if (std::abs(m + n) > bound) {
        continue;  // d(mu) undefined here, no constraint
      }
      const auto cell = omega.value({m, n});
      if (!cell.has_value()) {
        continue;
      }
      // d(mu)(L_m, L_n) = -(m-n) mu(L_{m+n}) must equal omega(L_m, L_n).
      LinearRow row;
      row.coeffs.assign(static_cast<std::size_t>(columns), Rational(0));
      row.coeffs[static_cast<std::size_t>(m + n + bound)] = Rational(-(m - n));
      row.constant = -*cell;
      rows.push_back(std::move(row));
    }
  }
  const ReducedSystem reduced = reduce_system(std::move(rows), columns);
  const auto solution = particular_solution(reduced);
  if (!solution.has_value()) {
    return std::nullopt;
  }
  Cochain witness(1, omega.window());
  for (int n = -bound; n <= bound; ++n) {
    witness.set_value({n}, (*solution)[static_cast<std::size_t>(n + bound)]);
  }
  return witness;
}

Cochain diagonal_to_cochain(const DiagonalCocycle& diagonal) {
  Cochain result(2, Window(diagonal.bound()));
  for (int m = 1; m <= diagonal.bound(); ++m) {
    // Ascending key (-m, m) holds omega(L_-m, L_m) = f(-m) = -f(m).
    result.set_value({-m, m}, -diagonal.f(m));
  }
  return result;
}

CocycleSolveReport diagonal_cocycle_solve(int window_bound) {
  if (window_bound < 4) {
    throw UnderDeterminedWindow(
        "diagonal cocycle solve needs a window of at least 4");
  }
  const int columns = window_bound;  // f(1) .. f(window)
  auto term = [&](std::vector<Rational>& coeffs, int index, const Rational& scale) {
    // f extended oddly with f(0) = 0.
    if (index > 0) {
      coeffs[static_cast<std::size_t>(index - 1)] += scale;
    } else if (index < 0) {
      coeffs[static_cast<std::size_t>(-index - 1)] -= scale;
    }
  };

  // Cocycle condition on (L_m, L_n, L_{-m-n}):
  // (m-n) f(m+n) - (m+2n) f(m) + (2m+n) f(n) = 0.
  std::vector<LinearRow> rows;
  for (int m = -window_bound; m <= window_bound; ++m) {
    for (int n = m + 1; n <= window_bound; ++n) {
      if (std::abs(m + n) > window_bound) {
        continue;
      }
      LinearRow row;
      row.coeffs.assign(static_cast<std::size_t>(columns), Rational(0));
      term(row.coeffs, m + n, Rational(m - n));
      term(row.coeffs, m, Rational(-(m + 2 * n)));
      term(row.coeffs, n, Rational(2 * m + n));
      bool nonzero = false;
      for (const auto& value : row.coeffs) {
        if (value != 0) {
          nonzero = true;
          break;
        }
      }
      if (nonzero) {
        rows.push_back(std::move(row));
      }
    }
  }

  const ReducedSystem reduced = reduce_system(std::move(rows), columns);
  const auto basis = nullspace_basis(reduced);

  CocycleSolveReport report;
  report.window = window_bound;
  report.solution_dimension = static_cast<long>(basis.size());
  for (const auto& vec : basis) {
    std::map<int, Rational> entry;
    for (int m = 1; m <= window_bound; ++m) {
      if (vec[static_cast<std::size_t>(m - 1)] != 0) {
        entry.emplace(m, vec[static_cast<std::size_t>(m - 1)]);
      }
    }
    report.basis.push_back(std::move(entry));
  }

  // The coboundary line inside the ansatz: d(mu) has f(m) = -2m mu(L_0).
  // Confirm it solves the reduced system, then split it off.
  {
    std::vector<Rational> linear(static_cast<std::size_t>(columns));
    for (int m = 1; m <= window_bound; ++m) {
      linear[static_cast<std::size_t>(m - 1)] = m;
    }
    bool solves = true;
    for (const auto& row : reduced.rows) {
      Rational acc = 0;
      for (int c = 0; c < columns; ++c) {
        acc += row.coeffs[static_cast<std::size_t>(c)] *
               linear[static_cast<std::size_t>(c)];
      }
      if (acc != 0) {
        solves = false;
        break;
      }
    }
    report.coboundary_dimension = solves ? 1 : 0;
  }
  report.quotient_dimension = report.solution_dimension - report.coboundary_dimension;

  // Normalized representative: the solution with f(1) = 0 and f(2) = 1/2.
  {
    const int dims = static_cast<int>(basis.size());
    std::vector<LinearRow> gauge;
    for (const int target : {1, 2}) {
      LinearRow row;
      row.coeffs.assign(static_cast<std::size_t>(dims), Rational(0));
      for (int d = 0; d < dims; ++d) {
        row.coeffs[static_cast<std::size_t>(d)] =
            basis[static_cast<std::size_t>(d)][static_cast<std::size_t>(target - 1)];
      }
      row.constant = CentralScalar(target == 1 ? Rational(0) : make_rational(-1, 2));
      gauge.push_back(std::move(row));
    }
    const auto mix = particular_solution(reduce_system(std::move(gauge), dims));
    if (mix.has_value()) {
      for (int m = 1; m <= window_bound; ++m) {
        Rational value = 0;
        for (int d = 0; d < dims; ++d) {
          value += (*mix)[static_cast<std::size_t>(d)].rational_part() *
                   basis[static_cast<std::size_t>(d)][static_cast<std::size_t>(m - 1)];
        }
        if (value != 0) {
          report.normalized_representative.emplace(m, value);
        }
      }
    }
  }
  return report;
}

namespace {

ExtensionReport build_extension_table(const BasisBracket& bracket, Window window) {
  ExtensionReport report;
  report.window = window;
  const int bound = window.bound();
  for (int m = -bound; m <= bound; ++m) {
    for (int n = -bound; n <= bound; ++n) {
      const auto cell = bracket(m, n);
      if (cell.has_value()) {
        report.table.emplace(std::pair{m, n}, *cell);
      }
    }
  }
  report.jacobi = jacobi_check(bracket, window);
  return report;
}

std::string triple_text(const std::array<int, 3>& triple) {
  return "(" + std::to_string(triple[0]) + ", " + std::to_string(triple[1]) + ", " +
         std::to_string(triple[2]) + ")";
}

}  // namespace

ExtensionReport build_central_extension(const DiagonalCocycle& omega, Window window) {
  const CocycleCheck check = is_cocycle(diagonal_to_cochain(omega));
  if (!check.holds) {
    throw InvalidInput("not a cocycle; counterexample " +
                       triple_text(*check.counterexample));
  }
  return build_extension_table(virasoro_basis_bracket(window, omega), window);
}

ExtensionReport build_central_extension(const Cochain& omega, Window window) {
  const CocycleCheck check = is_cocycle(omega);
  if (!check.holds) {
    throw InvalidInput("not a cocycle; counterexample " +
                       triple_text(*check.counterexample));
  }
  const int bound = window.bound();
  BasisBracket bracket = [omega, bound](int m, int n) -> std::optional<VirasoroElement> {
    if (std::abs(m) > bound || std::abs(n) > bound) {
      return std::nullopt;
    }
    const auto value = omega.value({m, n});
    if (!value.has_value()) {
      return std::nullopt;
    }
    return VirasoroElement(WittElement::basis(m + n, CentralScalar(Rational(m - n))),
                           *value * CentralScalar::c());
  };
  return build_extension_table(bracket, window);
}

VirasoroElement virasoro_bracket(const VirasoroElement& x, const VirasoroElement& y,
                                 const Cochain& omega) {
  if (omega.degree() != 2) {
    throw InvalidInput("central extensions use 2-cochains");
  }
  WittElement mode_part = witt_bracket(x.witt(), y.witt());
  CentralScalar central;
  for (const auto& [m, cm] : x.witt().modes()) {
    for (const auto& [n, cn] : y.witt().modes()) {
      const auto value = omega.value({m, n});
      if (!value.has_value()) {
        throw WindowExhaustion("cocycle evaluation outside the window");
      }
      central += cm * cn * *value * CentralScalar::c();
    }
  }
  return VirasoroElement(std::move(mode_part), std::move(central));
}

}  // namespace virasoro
