#pragma once

#include "virasoro/fields.hpp"
#include "virasoro/window.hpp"
#include "virasoro/witt.hpp"

#include <map>
#include <string>

namespace virasoro {

/// Singular part of an operator product a(z) b(w): a finite mapping
/// j -> c_j(w) read as sum_j c_j(w) / (z-w)^(j+1). Construction validates
/// weight bookkeeping: every nonzero c_j must be homogeneous of weight
/// weight(a) + weight(b) - j - 1.
class OpeData {
 public:
  OpeData(FieldSymbol left, FieldSymbol right,
          std::map<int, FieldPolynomial> singular);

  /// Skips the weight validation. Deliberately broken singular parts built
  /// this way still feed every bracket extraction, which is how negative
  /// fixtures probe the identification checks.
  static OpeData unchecked(FieldSymbol left, FieldSymbol right,
                           std::map<int, FieldPolynomial> singular);

  /// The canonical energy-momentum OPE:
  /// (c/2)/(z-w)^4 + 2T(w)/(z-w)^2 + dT(w)/(z-w).
  static OpeData tt();
  /// The constrained family with the second-order slot parameterized:
  /// (c/2)/(z-w)^4 + 2*f(w)/(z-w)^2 + df(w)/(z-w).
  static OpeData tt_with_c1(const FieldPolynomial& f);

  const FieldSymbol& left() const { return left_; }
  const FieldSymbol& right() const { return right_; }
  const std::map<int, FieldPolynomial>& singular() const { return singular_; }
  FieldPolynomial coefficient(int j) const;
  /// N = 1 + max j; 0 for an empty singular part.
  int order() const;
  bool empty() const { return singular_.empty(); }

  friend bool operator==(const OpeData&, const OpeData&) = default;

  /// Display form "c/2/(z-w)^4 + 2*T(w)/(z-w)^2 + dT(w)/(z-w)".
  std::string display() const;

 private:
  struct Unvalidated {};
  OpeData(Unvalidated, FieldSymbol left, FieldSymbol right,
          std::map<int, FieldPolynomial> singular);

  FieldSymbol left_;
  FieldSymbol right_;
  std::map<int, FieldPolynomial> singular_;  // j -> c_j, no zero entries
};

/// The commutator distribution sum_j d_w^(j) delta(z-w) * c_j(w): the same
/// mapping carried into delta-expansion form over the field coefficients.
class FieldDistribution {
 public:
  FieldDistribution() = default;
  explicit FieldDistribution(std::map<int, FieldPolynomial> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, FieldPolynomial>& terms() const { return terms_; }
  FieldPolynomial term(int j) const;

  friend bool operator==(const FieldDistribution&, const FieldDistribution&) = default;

 private:
  std::map<int, FieldPolynomial> terms_;
};

FieldDistribution ope_to_distribution(const OpeData& ope);

/// Window-truncated bivariate table with mode-element cells; cell (m, n)
/// holds the coefficient of z^(-m-1) w^(-n-1).
class ModeTable {
 public:
  explicit ModeTable(Window window) : window_(window) {}

  const Window& window() const { return window_; }
  ModeTable& add(int m, int n, const ModeElement& value);
  ModeElement at(int m, int n) const;

  ModeTable mul_zw_power(int steps) const;
  /// Row z^(-1) as a map from w-mode index to coefficient.
  std::map<int, ModeElement> residue_row() const;

 private:
  Window window_;
  std::map<std::pair<int, int>, ModeElement> cells_;
};

/// Expands the distribution cell-by-cell over a window of mode indices.
ModeTable realize_modes(const FieldDistribution& d, Window window);

/// Recovers term j as mode data via residues of (z-w)^j times the table.
std::map<int, ModeElement> extract_term_modes(const ModeTable& table, int j);

/// Mode bracket of the two fields in their natural labeling (for weight-2
/// fields, [L_m, L_n]): evaluates the finite binomial sum over the singular
/// coefficients. Indices are shifted internally by weight - 1.
ModeElement mode_bracket_from_ope(const OpeData& ope, int m, int n);

/// Bracket of one mode against the whole field:
/// sum_j binom(m + weight - 1, j) c_j(w) w^(m + weight - 1 - j).
FieldPolynomial mode_field_bracket(const OpeData& ope, int m);

/// Contour route to the same bracket: Taylor-expand z^(m+weight-1) about w,
/// pair the order-i term with the order-j pole (only i == j leaves a simple
/// pole), multiply by w^(n+weight-1), and take the residue in w.
ModeElement residue_pairing_bracket(const OpeData& ope, int m, int n);

/// When the top singular coefficient is a nonzero constant, the combined
/// weight must be at least the pole order; vacuously true otherwise.
bool weight_bound_check(const OpeData& ope);

/// Confirms mode brackets of the given TT-type OPE reproduce the defining
/// relations of the energy-momentum tensor:
///   [L_-1, T(w)] = dT(w),  [L_0, T(w)] = (w d + 2) T(w),
/// with no central leakage into either bracket.
bool verify_t_identification(const OpeData& ope);

/// Reads a combination of energy-momentum modes as a Virasoro element.
VirasoroElement to_virasoro(const ModeElement& element);

}  // namespace virasoro
