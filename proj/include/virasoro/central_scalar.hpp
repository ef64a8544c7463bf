#pragma once

#include "virasoro/rational.hpp"

#include <map>
#include <string>

namespace virasoro {

/// Polynomial in the formal central-charge symbol c over the rationals.
/// This is the coefficient ring used throughout the library; the degree-0
/// embedding of Rational is a ring homomorphism.
class CentralScalar {
 public:
  CentralScalar() = default;
  CentralScalar(Rational constant);  // NOLINT: intentional embedding
  CentralScalar(int constant);       // NOLINT: literal convenience

  /// The monomial c^degree.
  static CentralScalar c(int degree = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const;
  /// Coefficient of c^degree (zero when absent).
  Rational coefficient(int degree) const;
  Rational rational_part() const { return coefficient(0); }
  int degree() const;
  const std::map<int, Rational>& coefficients() const { return coeffs_; }

  CentralScalar& operator+=(const CentralScalar& other);
  CentralScalar& operator-=(const CentralScalar& other);
  CentralScalar operator-() const;
  friend CentralScalar operator+(CentralScalar a, const CentralScalar& b) {
    a += b;
    return a;
  }
  friend CentralScalar operator-(CentralScalar a, const CentralScalar& b) {
    a -= b;
    return a;
  }
  friend CentralScalar operator*(const CentralScalar& a, const CentralScalar& b);
  CentralScalar scaled(const Rational& factor) const;

  friend bool operator==(const CentralScalar&, const CentralScalar&) = default;

  std::string to_string() const;

 private:
  void add(int degree, const Rational& value);

  std::map<int, Rational> coeffs_;  // degree -> coefficient, no stored zeros
};

}  // namespace virasoro
