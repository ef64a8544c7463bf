#pragma once

#include "virasoro/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace virasoro {

/// A declared field with a fixed conformal weight. A weight-D field expands
/// in modes as F(w) = sum_n F_n w^(-n-D).
struct FieldSymbol {
  std::string name;
  int weight = 0;

  friend bool operator==(const FieldSymbol&, const FieldSymbol&) = default;
  friend auto operator<=>(const FieldSymbol&, const FieldSymbol&) = default;
};

/// The energy-momentum tensor: the built-in weight-2 field whose modes are
/// written L_n.
FieldSymbol energy_momentum();

/// One summand scalar * w^exponent * d^order F(w); a CONST term has no
/// field symbol and derivative order zero.
struct FieldTerm {
  CentralScalar scalar;
  int derivative_order = 0;
  std::optional<FieldSymbol> symbol;
  int w_exponent = 0;
};

/// Finite sum of field terms, linear in the field symbols. Canonicalized so
/// equal polynomials compare equal.
class FieldPolynomial {
 public:
  FieldPolynomial() = default;

  static FieldPolynomial constant(CentralScalar value, int w_exponent = 0);
  static FieldPolynomial of(const FieldSymbol& symbol, int derivative_order = 0,
                            int w_exponent = 0,
                            CentralScalar scale = CentralScalar(1));

  bool is_zero() const { return terms_.empty(); }
  std::vector<FieldTerm> terms() const;

  FieldPolynomial& operator+=(const FieldPolynomial& other);
  FieldPolynomial& operator-=(const FieldPolynomial& other);
  friend FieldPolynomial operator+(FieldPolynomial a, const FieldPolynomial& b) {
    a += b;
    return a;
  }
  friend FieldPolynomial operator-(FieldPolynomial a, const FieldPolynomial& b) {
    a -= b;
    return a;
  }
  FieldPolynomial scaled(const CentralScalar& factor) const;
  /// Multiplication by w^amount.
  FieldPolynomial shifted(int amount) const;
  /// d/dw, with the product rule across the w-power and the symbol.
  FieldPolynomial derivative() const;
  FieldPolynomial divided_derivative(int j) const;

  friend bool operator==(const FieldPolynomial&, const FieldPolynomial&) = default;

  /// The common conformal weight of all terms, when they agree:
  /// weight(d^k F * w^e) = weight(F) + k - e and weight(CONST) = 0.
  std::optional<int> homogeneous_weight() const;

  std::string to_string() const;

 private:
  // (symbol?, derivative order, w exponent) -> scalar
  using Key = std::tuple<std::optional<FieldSymbol>, int, int>;
  std::map<Key, CentralScalar> terms_;

  void add(const Key& key, const CentralScalar& value);
};

int term_weight(const FieldTerm& term);

/// Finite combination of field modes plus a central scalar.
class ModeElement {
 public:
  ModeElement() = default;

  ModeElement& add_mode(const FieldSymbol& symbol, int index,
                        const CentralScalar& value);
  ModeElement& add_central(const CentralScalar& value);

  bool is_zero() const { return modes_.empty() && central_.is_zero(); }
  const std::map<std::pair<FieldSymbol, int>, CentralScalar>& modes() const {
    return modes_;
  }
  CentralScalar mode(const FieldSymbol& symbol, int index) const;
  const CentralScalar& central() const { return central_; }

  ModeElement& operator+=(const ModeElement& other);
  ModeElement& operator-=(const ModeElement& other);
  friend ModeElement operator+(ModeElement a, const ModeElement& b) {
    a += b;
    return a;
  }
  friend ModeElement operator-(ModeElement a, const ModeElement& b) {
    a -= b;
    return a;
  }
  ModeElement scaled(const CentralScalar& factor) const;

  friend bool operator==(const ModeElement&, const ModeElement&) = default;

  std::string to_string() const;

 private:
  std::map<std::pair<FieldSymbol, int>, CentralScalar> modes_;  // no zeros
  CentralScalar central_;
};

/// Coefficient of w^(-k-1) in the mode expansion of a field polynomial.
/// CONST terms contribute to the central part.
ModeElement mode_coefficient(const FieldPolynomial& p, int k);

/// Applies the grading operator H = weight + w d/dw to a homogeneous
/// polynomial. Mode bookkeeping demands this equals scaling each mode F_p
/// by -p; h_consistency_check verifies that on a window of coefficients.
FieldPolynomial apply_grading(const FieldPolynomial& p);
bool h_consistency_check(const FieldPolynomial& p, int mode_window);

}  // namespace virasoro
