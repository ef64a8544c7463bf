#pragma once

#include "virasoro/central_scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace virasoro {

enum class Var : unsigned char { z, w, u };

char var_name(Var v);

/// Finite-support univariate Laurent polynomial over CentralScalar,
/// tagged with its variable. Zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(Var variable) : var_(variable) {}

  static LaurentPoly monomial(Var variable, int exponent,
                              CentralScalar coeff = CentralScalar(1));

  Var variable() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  CentralScalar coefficient(int exponent) const;
  const std::map<int, CentralScalar>& coefficients() const { return coeffs_; }
  /// Largest |exponent| in the support; 0 for the zero polynomial.
  int max_abs_exponent() const;

  LaurentPoly& add_term(int exponent, const CentralScalar& coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const CentralScalar& factor) const;
  /// Multiplication by x^amount.
  LaurentPoly shifted(int amount) const;
  /// Same coefficients under a different variable tag.
  LaurentPoly with_variable(Var variable) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  Var var_;
  std::map<int, CentralScalar> coeffs_;  // exponent -> coefficient, no zeros
};

/// j-fold derivative; with divided, the divided power d^j/j!. An exponent n
/// contributes the falling product n(n-1)...(n-j+1), so gen_binomial(n, j)
/// appears naturally in the divided form.
LaurentPoly derivative(const LaurentPoly& f, int j = 1, bool divided = false);

/// Coefficient of exponent -1.
CentralScalar residue(const LaurentPoly& f);

/// Taylor data for z^k about w: entry i is gen_binomial(k, i) * w^(k-i), so
/// z^k = sum_i entry_i * (z-w)^i through the requested order.
std::vector<LaurentPoly> taylor_about_w(int k, int order);

}  // namespace virasoro
