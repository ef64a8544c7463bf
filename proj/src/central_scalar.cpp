#include "virasoro/central_scalar.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

CentralScalar::CentralScalar(Rational constant) {
  add(0, constant);
}

CentralScalar::CentralScalar(int constant) {
  add(0, Rational(constant));
}

CentralScalar CentralScalar::c(int degree) {
  if (degree < 0) {
    throw InvalidInput("negative power of the central symbol");
  }
  CentralScalar result;
  result.add(degree, Rational(1));
  return result;
}

bool CentralScalar::is_rational() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational CentralScalar::coefficient(int degree) const {
  const auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int CentralScalar::degree() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

void CentralScalar::add(int degree, const Rational& value) {
  if (value == 0) {
    return;
  }
  auto [it, inserted] = coeffs_.emplace(degree, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) {
      coeffs_.erase(it);
    }
  }
}

CentralScalar& CentralScalar::operator+=(const CentralScalar& other) {
  for (const auto& [degree, value] : other.coeffs_) {
    add(degree, value);
  }
  return *this;
}

CentralScalar& CentralScalar::operator-=(const CentralScalar& other) {
  for (const auto& [degree, value] : other.coeffs_) {
    add(degree, -value);
  }
  return *this;
}

CentralScalar CentralScalar::operator-() const {
  CentralScalar result;
  for (const auto& [degree, value] : coeffs_) {
    result.coeffs_.emplace(degree, -value);
  }
  return result;
}

CentralScalar operator*(const CentralScalar& a, const CentralScalar& b) {
  CentralScalar result;
  for (const auto& [da, va] : a.coeffs_) {
    for (const auto& [db, vb] : b.coeffs_) {
      result.add(da + db, va * vb);
    }
  }
  return result;
}

CentralScalar CentralScalar::scaled(const Rational& factor) const {
  CentralScalar result;
  if (factor == 0) {
    return result;
  }
  for (const auto& [degree, value] : coeffs_) {
    result.coeffs_.emplace(degree, value * factor);
  }
  return result;
}

std::string CentralScalar::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [degree, value] : coeffs_) {
    std::string term;
    if (degree == 0) {
      term = rational_to_display(value);
    } else {
      std::string power = degree == 1 ? "c" : "c^" + std::to_string(degree);
      if (value == 1) {
        term = power;
      } else if (value == -1) {
        term = "-" + power;
      } else {
        term = rational_to_display(value) + "*" + power;
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

}  // namespace virasoro
