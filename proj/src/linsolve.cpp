#include "virasoro/linsolve.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

ReducedSystem reduce_system(std::vector<LinearRow> rows, int columns) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.coeffs.size()) != columns) {
      throw InvalidInput("ragged linear system");
    }
  }
  ReducedSystem result;
  result.columns = columns;
  result.row_of_column.assign(static_cast<std::size_t>(columns), -1);

  std::size_t next = 0;  // first unreduced input row
  for (int col = 0; col < columns && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && rows[pivot].coeffs[col] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[next], rows[pivot]);
    LinearRow& head = rows[next];
    const Rational inverse = Rational(1) / head.coeffs[col];
    for (auto& value : head.coeffs) {
      value *= inverse;
    }
    head.constant = head.constant.scaled(inverse);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r].coeffs[col] == 0) {
        continue;
      }
      const Rational factor = rows[r].coeffs[col];
      for (int c = 0; c < columns; ++c) {
        rows[r].coeffs[c] -= factor * head.coeffs[c];
      }
      rows[r].constant -= head.constant.scaled(factor);
    }
    result.row_of_column[col] = static_cast<int>(result.pivot_of_row.size());
    result.pivot_of_row.push_back(col);
    ++next;
  }

  // Rows keep changing while later pivots back-substitute, so they are
  // copied out only once the sweep is complete.
  result.rows.assign(rows.begin(), rows.begin() + static_cast<long>(next));

  for (std::size_t r = next; r < rows.size(); ++r) {
    if (!rows[r].constant.is_zero()) {
      result.consistent = false;
      break;
    }
  }
  return result;
}

std::vector<std::vector<Rational>> nullspace_basis(const ReducedSystem& reduced) {
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < reduced.columns; ++free) {
    if (reduced.is_pivot(free)) {
      continue;
    }
    std::vector<Rational> vec(static_cast<std::size_t>(reduced.columns), Rational(0));
    vec[free] = 1;
    for (std::size_t r = 0; r < reduced.rows.size(); ++r) {
      vec[reduced.pivot_of_row[r]] = -reduced.rows[r].coeffs[free];
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

std::optional<std::vector<CentralScalar>> particular_solution(
    const ReducedSystem& reduced) {
  if (!reduced.consistent) {
    return std::nullopt;
  }
  std::vector<CentralScalar> solution(static_cast<std::size_t>(reduced.columns));
  for (std::size_t r = 0; r < reduced.rows.size(); ++r) {
    solution[reduced.pivot_of_row[r]] = -reduced.rows[r].constant;
  }
  return solution;
}

}  // namespace virasoro
