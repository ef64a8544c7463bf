#pragma once

#include "virasoro/central_scalar.hpp"

#include <optional>
#include <vector>

namespace virasoro {

/// One exact linear equation sum_i coeffs[i] * x_i + constant = 0. The
/// matrix entries are rational; constants may carry the central symbol.
struct LinearRow {
  std::vector<Rational> coeffs;
  CentralScalar constant;
};

/// Reduced row echelon form of an exact system. Pivot rows are normalized
/// and fully back-substituted, so a pivot column's value reads off as
/// x_pivot = -constant - sum over free columns of coeff * x_free.
struct ReducedSystem {
  int columns = 0;
  std::vector<LinearRow> rows;        // one per pivot, ascending pivot column
  std::vector<int> pivot_of_row;      // pivot column per reduced row
  std::vector<int> row_of_column;     // reduced row per column, -1 if free
  bool consistent = true;             // no row reduced to 0 = nonzero

  bool is_pivot(int column) const { return row_of_column[column] >= 0; }
};

ReducedSystem reduce_system(std::vector<LinearRow> rows, int columns);

/// Basis of the homogeneous solution space (constants ignored).
std::vector<std::vector<Rational>> nullspace_basis(const ReducedSystem& reduced);

/// The solution with every free variable set to zero, when consistent.
std::optional<std::vector<CentralScalar>> particular_solution(
    const ReducedSystem& reduced);

}  // namespace virasoro
