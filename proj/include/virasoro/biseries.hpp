#pragma once

#include "virasoro/laurent.hpp"
#include "virasoro/window.hpp"

#include <map>
#include <string>
#include <utility>

namespace virasoro {

/// Window-truncated bivariate Laurent series in z and w. Coefficients are
/// stored only inside the guaranteed box; everything outside the window is
/// unknown, not zero.
class BiSeries {
 public:
  explicit BiSeries(Window window) : window_(window) {}

  static BiSeries monomial(Window window, int z_exp, int w_exp,
                           CentralScalar coeff = CentralScalar(1));

  const Window& window() const { return window_; }
  CentralScalar coefficient(int z_exp, int w_exp) const;
  const std::map<std::pair<int, int>, CentralScalar>& coefficients() const {
    return coeffs_;
  }

  /// Adds a term, silently discarding anything outside the window.
  BiSeries& add_term(int z_exp, int w_exp, const CentralScalar& coeff);

  BiSeries operator+(const BiSeries& other) const;
  BiSeries operator-(const BiSeries& other) const;
  BiSeries scaled(const CentralScalar& factor) const;

  /// Multiplication by a z- or w-tagged polynomial; the guarantee shrinks by
  /// the largest exponent magnitude in the factor's support.
  BiSeries multiplied_by(const LaurentPoly& factor) const;

  /// Multiplication by (z-w)^n; shrinks the guarantee by n.
  BiSeries mul_zw_power(int n) const;

  /// Partial derivative; shrinks the guarantee by one.
  BiSeries derivative(Var which) const;

  /// Exchanges the roles of z and w.
  BiSeries swapped() const;

  bool is_zero_on_window() const { return coeffs_.empty(); }
  /// Equality over the intersection of the two guarantees.
  bool equal_on_shared_window(const BiSeries& other) const;

  /// Coefficient of z^-1 as a polynomial in w. Requires a window of at
  /// least 1; the result is exact for |exponent| <= bound.
  LaurentPoly residue_z() const;

  std::string to_string() const;

 private:
  Window window_;
  std::map<std::pair<int, int>, CentralScalar> coeffs_;  // no stored zeros
};

}  // namespace virasoro
