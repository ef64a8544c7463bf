#pragma once

#include "virasoro/laurent.hpp"
#include "virasoro/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace virasoro {

/// A coefficient unknown: the value of w^exponent in the slot-j singular
/// coefficient c_j(w).
using ExchangeUnknown = std::pair<int, int>;  // (slot, exponent)

/// A constraint row violated by the fixed data alone: after cancellation no
/// unknowns remain and the residual constant is nonzero.
struct ExchangeViolation {
  int constraint_order;
  int exponent;
  CentralScalar residual;

  friend bool operator==(const ExchangeViolation&, const ExchangeViolation&) = default;
};

/// Affine dependency of a determined unknown on the free unknowns.
struct ExchangeRelation {
  std::map<ExchangeUnknown, Rational> dependencies;
  CentralScalar constant;

  bool is_zero() const { return dependencies.empty() && constant.is_zero(); }
  friend bool operator==(const ExchangeRelation&, const ExchangeRelation&) = default;
};

/// Outcome of imposing exchange symmetry on a same-field singular part of
/// order N: swapping the two variables and re-expanding every coefficient
/// about the first one must reproduce the original expansion order by
/// order. The report separates the consistent linear system among the
/// unknown coefficients from residual equations the fixed slots must
/// satisfy on their own.
class ExchangeReport {
 public:
  int order() const { return order_; }
  int exponent_window() const { return window_; }
  const std::map<int, LaurentPoly>& fixed_slots() const { return fixed_; }
  const std::vector<int>& unknown_slots() const { return unknown_slots_; }

  bool unknown_system_consistent() const { return consistent_; }
  const std::vector<ExchangeViolation>& violations() const { return violations_; }
  bool satisfiable() const { return consistent_ && violations_.empty(); }

  /// Relation of a determined unknown; nullopt when the unknown is free.
  std::optional<ExchangeRelation> relation(int slot, int exponent) const;
  bool is_free(int slot, int exponent) const;
  /// Unknowns of a slot that no generated constraint row mentions; these sit
  /// within derivative reach of the window edge.
  std::set<int> undetermined_exponents(int slot) const;

  bool slot_is_free(int slot) const;
  /// All in-window unknowns of the slot are determined and zero.
  bool slot_is_zero(int slot) const;

  /// Checks whether the determined part of target reads exactly
  /// c_target = factor * d^order c_source, and returns the factor.
  std::optional<Rational> proportional_derivative(int target_slot, int source_slot,
                                                  int derivative_order) const;

  long solution_dimension() const { return free_count_; }
  std::vector<std::string> summary() const;

  friend ExchangeReport solve_exchange_constraints(
      int order, const std::map<int, LaurentPoly>& fixed, int exponent_window);

 private:
  int order_ = 0;
  int window_ = 0;
  std::map<int, LaurentPoly> fixed_;
  std::vector<int> unknown_slots_;
  bool consistent_ = true;
  long free_count_ = 0;
  std::vector<ExchangeViolation> violations_;
  std::map<ExchangeUnknown, ExchangeRelation> determined_;
  std::set<ExchangeUnknown> free_;
  std::set<ExchangeUnknown> unmentioned_;  // free and absent from every row
};

/// Generates the exchange-symmetry constraints for a same-field OPE of the
/// given order, with the listed slots fixed (polynomials in w) and all other
/// singular coefficients treated as unknowns on |exponent| <= window.
ExchangeReport solve_exchange_constraints(int order,
                                          const std::map<int, LaurentPoly>& fixed,
                                          int exponent_window);

}  // namespace virasoro
