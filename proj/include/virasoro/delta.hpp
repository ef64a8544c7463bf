#pragma once

#include "virasoro/biseries.hpp"

#include <map>
#include <string>

namespace virasoro {

/// Finite sum over j of c_j(w) * delta_j(z-w), where delta_j is the j-th
/// divided derivative of the formal delta function. Unlike a BiSeries this
/// is an exact representation: no truncation happens at this level.
class DeltaExpansion {
 public:
  DeltaExpansion() = default;

  DeltaExpansion& set_term(int j, LaurentPoly coeff_in_w);
  DeltaExpansion& add_term(int j, const LaurentPoly& coeff_in_w);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly term(int j) const;
  /// Smallest N with (z-w)^N annihilating the distribution: 1 + max j.
  int locality_order() const;

  DeltaExpansion operator+(const DeltaExpansion& other) const;
  DeltaExpansion operator-(const DeltaExpansion& other) const;
  DeltaExpansion scaled(const CentralScalar& factor) const;

  /// Multiplication by (z-w)^n: term j moves to j-n, orders below n vanish.
  DeltaExpansion mul_zw_power(int n) const;

  friend bool operator==(const DeltaExpansion&, const DeltaExpansion&) = default;

  std::string to_string() const;

 private:
  std::map<int, LaurentPoly> terms_;  // j -> c_j(w), no zero polynomials
};

/// The j-th divided derivative of the formal delta function on a window:
/// the coefficient of z^(-m-1) w^(m-j) is gen_binomial(m, j).
BiSeries delta_derivative(int j, Window window);

enum class ExpansionSide { zw, wz };

/// Power-series expansion of 1/(z-w)^(j+1) in the region |z| > |w| (zw) or
/// |w| > |z| (wz). Their difference realizes delta_derivative(j).
BiSeries expand_izw(int j, ExpansionSide side, Window window);

/// Substitution z -> w computed as the residue of f(z) * delta(z-w).
LaurentPoly res_z_field(const LaurentPoly& f_in_z, Window window);

/// Realizes the exact expansion as a window-truncated series.
BiSeries realize(const DeltaExpansion& d, Window window);

/// Extracts delta-expansion terms 0..max_j from a series by taking residues
/// of a(z,w) (z-w)^j. Fails with WindowExhaustion when a requested order
/// would read outside the guarantee.
DeltaExpansion project_pi(const BiSeries& a, int max_j);

/// Series coefficient a_{m,n} in the z^(-m-1) w^(-n-1) indexing, computed
/// from the expansion alone: sum_j gen_binomial(m, j) * c^j_{m+n-j} where
/// c^j(w) = sum_n c^j_n w^(-n-1).
CentralScalar coefficient_formula(const DeltaExpansion& d, int m, int n);

/// Whether (z-w)^n annihilates the series on the shrunken window.
bool is_local(const BiSeries& a, int n);

}  // namespace virasoro
