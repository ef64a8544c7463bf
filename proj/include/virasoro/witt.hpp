#pragma once

#include "virasoro/laurent.hpp"
#include "virasoro/window.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace virasoro {

/// A vector field f(z) d/dz on the punctured plane.
class VectorField {
 public:
  explicit VectorField(LaurentPoly coefficient);

  const LaurentPoly& coefficient() const { return coeff_; }
  bool is_zero() const { return coeff_.is_zero(); }

  VectorField operator+(const VectorField& other) const;
  VectorField operator-(const VectorField& other) const;
  VectorField scaled(const CentralScalar& factor) const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

  std::string to_string() const;

 private:
  LaurentPoly coeff_;  // in z
};

/// Basis vector field -z^(j+1) d/dz.
VectorField witt_basis_field(int j);

/// Commutator of vector fields: (f g' - g f') d/dz.
VectorField vf_bracket(const VectorField& a, const VectorField& b);

/// Finite combination of mode basis elements.
class WittElement {
 public:
  WittElement() = default;
  static WittElement basis(int n, CentralScalar coeff = CentralScalar(1));

  bool is_zero() const { return modes_.empty(); }
  const std::map<int, CentralScalar>& modes() const { return modes_; }
  CentralScalar mode(int n) const;

  WittElement& add(int n, const CentralScalar& coeff);
  WittElement& operator+=(const WittElement& other);
  WittElement& operator-=(const WittElement& other);
  friend WittElement operator+(WittElement a, const WittElement& b) {
    a += b;
    return a;
  }
  friend WittElement operator-(WittElement a, const WittElement& b) {
    a -= b;
    return a;
  }
  WittElement scaled(const CentralScalar& factor) const;

  friend bool operator==(const WittElement&, const WittElement&) = default;

  std::string to_string() const;

 private:
  std::map<int, CentralScalar> modes_;  // no stored zeros
};

/// Bilinear extension of [L_m, L_n] = (m-n) L_{m+n}.
WittElement witt_bracket(const WittElement& x, const WittElement& y);

/// Element of the centrally extended algebra: a mode part plus a central
/// part written as a polynomial in the charge symbol.
class VirasoroElement {
 public:
  VirasoroElement() = default;
  VirasoroElement(WittElement witt, CentralScalar central);
  static VirasoroElement basis(int n, CentralScalar coeff = CentralScalar(1));
  static VirasoroElement center(CentralScalar value);

  const WittElement& witt() const { return witt_; }
  const CentralScalar& central() const { return central_; }
  bool is_zero() const { return witt_.is_zero() && central_.is_zero(); }

  VirasoroElement operator+(const VirasoroElement& other) const;
  VirasoroElement operator-(const VirasoroElement& other) const;
  VirasoroElement scaled(const CentralScalar& factor) const;

  friend bool operator==(const VirasoroElement&, const VirasoroElement&) = default;

  std::string to_string() const;

 private:
  WittElement witt_;
  CentralScalar central_;
};

/// Antisymmetric diagonal 2-form f(m) delta_{m+n,0} on a windowed mode
/// basis. Only positive arguments are stored; f(-m) = -f(m) and f(0) = 0
/// hold structurally. Reads outside the stored bound are window exits.
class DiagonalCocycle {
 public:
  explicit DiagonalCocycle(int bound);
  DiagonalCocycle(int bound, std::map<int, CentralScalar> positive_values);

  /// f(m) = m(m^2-1)/12: the normalized central term.
  static DiagonalCocycle virasoro(int bound);
  static DiagonalCocycle from_formula(
      int bound, const std::function<CentralScalar(int)>& f);

  int bound() const { return bound_; }
  /// Odd extension; requires |m| <= bound.
  CentralScalar f(int m) const;
  /// omega(L_m, L_n) = f(m) delta_{m+n,0}; nullopt when either index leaves
  /// the window.
  std::optional<CentralScalar> value(int m, int n) const;

  friend bool operator==(const DiagonalCocycle&, const DiagonalCocycle&) = default;

 private:
  int bound_;
  std::map<int, CentralScalar> values_;  // m > 0 only, no stored zeros
};

/// Bracket on the central extension attached to a diagonal 2-form: mode
/// parts bracket as in the base algebra, the form feeds the center (its
/// value multiplies the charge symbol), and central inputs are inert.
VirasoroElement virasoro_bracket(const VirasoroElement& x, const VirasoroElement& y,
                                 const DiagonalCocycle& omega);

/// Basis bracket function for window checks; nullopt marks a window exit.
using BasisBracket =
    std::function<std::optional<VirasoroElement>(int, int)>;

BasisBracket witt_basis_bracket(Window window);
BasisBracket virasoro_basis_bracket(Window window, DiagonalCocycle omega);

struct JacobiResult {
  bool holds = true;
  long checked = 0;
  long skipped = 0;  // triples whose inner bracket leaves the window
  std::optional<std::array<int, 3>> counterexample;
};

/// Cyclic Jacobi sum over all basis triples whose inner brackets stay in
/// the window; central contributions are included.
JacobiResult jacobi_check(const BasisBracket& bracket, Window window);

/// Confirms the mode algebra and the vector-field realization share their
/// structure constants on the window.
bool mode_vf_iso_check(Window window);

}  // namespace virasoro
