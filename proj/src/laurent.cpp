#include "virasoro/laurent.hpp"

#include "virasoro/errors.hpp"

#include <cstdlib>

namespace virasoro {

namespace {

void require_same_variable(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variable() != b.variable()) {
    throw InvalidInput("laurent arithmetic on mismatched variables");
  }
}

}  // namespace

char var_name(Var v) {
  switch (v) {
    case Var::z:
      return 'z';
    case Var::w:
      return 'w';
    case Var::u:
      return 'u';
  }
  return '?';
}

LaurentPoly LaurentPoly::monomial(Var variable, int exponent, CentralScalar coeff) {
  LaurentPoly result(variable);
  result.add_term(exponent, coeff);
  return result;
}

CentralScalar LaurentPoly::coefficient(int exponent) const {
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? CentralScalar() : it->second;
}

int LaurentPoly::max_abs_exponent() const {
  if (coeffs_.empty()) {
    return 0;
  }
  return std::max(std::abs(coeffs_.begin()->first), std::abs(coeffs_.rbegin()->first));
}

LaurentPoly& LaurentPoly::add_term(int exponent, const CentralScalar& coeff) {
  if (coeff.is_zero()) {
    return *this;
  }
  auto [it, inserted] = coeffs_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_variable(*this, other);
  for (const auto& [exponent, coeff] : other.coeffs_) {
    add_term(exponent, coeff);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_variable(*this, other);
  for (const auto& [exponent, coeff] : other.coeffs_) {
    add_term(exponent, -coeff);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_variable(a, b);
  LaurentPoly result(a.variable());
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      result.add_term(ea + eb, ca * cb);
    }
  }
  return result;
}

LaurentPoly LaurentPoly::scaled(const CentralScalar& factor) const {
  LaurentPoly result(var_);
  for (const auto& [exponent, coeff] : coeffs_) {
    result.add_term(exponent, coeff * factor);
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int amount) const {
  LaurentPoly result(var_);
  for (const auto& [exponent, coeff] : coeffs_) {
    result.coeffs_.emplace(exponent + amount, coeff);
  }
  return result;
}

LaurentPoly LaurentPoly::with_variable(Var variable) const {
  LaurentPoly result(variable);
  result.coeffs_ = coeffs_;
  return result;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  const char name = var_name(var_);
  std::string out;
  for (const auto& [exponent, coeff] : coeffs_) {
    std::string scalar = coeff.is_rational() ? rational_to_display(coeff.rational_part())
                                             : "(" + coeff.to_string() + ")";
    std::string term;
    if (exponent == 0) {
      term = coeff.is_rational() ? scalar : coeff.to_string();
    } else {
      std::string power(1, name);
      if (exponent != 1) {
        power += "^" + std::to_string(exponent);
      }
      if (scalar == "1") {
        term = power;
      } else if (scalar == "-1") {
        term = "-" + power;
      } else {
        term = scalar + "*" + power;
      }
    }
    if (!out.empty()) {
      if (!term.empty() && term.front() == '-') {
        out += " - ";
        term.erase(term.begin());
      } else {
        out += " + ";
      }
    }
    out += term;
  }
  return out;
}

LaurentPoly derivative(const LaurentPoly& f, int j, bool divided) {
  if (j < 0) {
    throw InvalidInput("negative derivative order");
  }
  BigInt factorial = 1;
  for (int i = 2; i <= j; ++i) {
    factorial *= i;
  }
  LaurentPoly result(f.variable());
  for (const auto& [exponent, coeff] : f.coefficients()) {
    Rational factor = gen_binomial(exponent, j);
    if (!divided) {
      factor *= factorial;
    }
    result.add_term(exponent - j, coeff.scaled(factor));
  }
  return result;
}

CentralScalar residue(const LaurentPoly& f) {
  if (f.variable() == Var::u) {
    throw InvalidInput("residue is defined for z- or w-tagged polynomials");
  }
  return f.coefficient(-1);
}

std::vector<LaurentPoly> taylor_about_w(int k, int order) {
  if (order < 0) {
    throw InvalidInput("negative taylor order");
  }
  std::vector<LaurentPoly> terms;
  terms.reserve(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    terms.push_back(
        LaurentPoly::monomial(Var::w, k - i, CentralScalar(gen_binomial(k, i))));
  }
  return terms;
}

}  // namespace virasoro
