#include "virasoro/biseries.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

BiSeries BiSeries::monomial(Window window, int z_exp, int w_exp, CentralScalar coeff) {
  BiSeries result(window);
  result.add_term(z_exp, w_exp, coeff);
  return result;
}

CentralScalar BiSeries::coefficient(int z_exp, int w_exp) const {
  if (!window_.contains(z_exp, w_exp)) {
    throw WindowExhaustion("coefficient read outside the guaranteed window");
  }
  const auto it = coeffs_.find({z_exp, w_exp});
  return it == coeffs_.end() ? CentralScalar() : it->second;
}

BiSeries& BiSeries::add_term(int z_exp, int w_exp, const CentralScalar& coeff) {
  if (coeff.is_zero() || !window_.contains(z_exp, w_exp)) {
    return *this;
  }
  auto [it, inserted] = coeffs_.emplace(std::pair{z_exp, w_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      coeffs_.erase(it);
    }
  }
  return *this;
}

BiSeries BiSeries::operator+(const BiSeries& other) const {
  BiSeries result(intersect(window_, other.window_));
  for (const auto& [key, coeff] : coeffs_) {
    result.add_term(key.first, key.second, coeff);
  }
  for (const auto& [key, coeff] : other.coeffs_) {
    result.add_term(key.first, key.second, coeff);
  }
  return result;
}

BiSeries BiSeries::operator-(const BiSeries& other) const {
  BiSeries result(intersect(window_, other.window_));
  for (const auto& [key, coeff] : coeffs_) {
    result.add_term(key.first, key.second, coeff);
  }
  for (const auto& [key, coeff] : other.coeffs_) {
    result.add_term(key.first, key.second, -coeff);
  }
  return result;
}

BiSeries BiSeries::scaled(const CentralScalar& factor) const {
  BiSeries result(window_);
  for (const auto& [key, coeff] : coeffs_) {
    result.add_term(key.first, key.second, coeff * factor);
  }
  return result;
}

BiSeries BiSeries::multiplied_by(const LaurentPoly& factor) const {
  if (factor.variable() == Var::u) {
    throw InvalidInput("bivariate series hold z and w only");
  }
  const bool in_z = factor.variable() == Var::z;
  BiSeries result(window_.shrunk(factor.max_abs_exponent()));
  if (result.window_.empty()) {
    throw WindowExhaustion("window exhausted by polynomial multiplication");
  }
  for (const auto& [key, coeff] : coeffs_) {
    for (const auto& [exponent, scale] : factor.coefficients()) {
      const int ze = key.first + (in_z ? exponent : 0);
      const int we = key.second + (in_z ? 0 : exponent);
      result.add_term(ze, we, coeff * scale);
    }
  }
  return result;
}

BiSeries BiSeries::mul_zw_power(int n) const {
  if (n < 0) {
    throw InvalidInput("negative power of (z-w)");
  }
  BiSeries result = *this;
  for (int step = 0; step < n; ++step) {
    BiSeries next(result.window_.shrunk(1));
    if (next.window_.empty()) {
      throw WindowExhaustion("window exhausted by (z-w) multiplication");
    }
    for (const auto& [key, coeff] : result.coeffs_) {
      next.add_term(key.first + 1, key.second, coeff);
      next.add_term(key.first, key.second + 1, -coeff);
    }
    result = std::move(next);
  }
  return result;
}

BiSeries BiSeries::derivative(Var which) const {
  if (which == Var::u) {
    throw InvalidInput("bivariate series hold z and w only");
  }
  BiSeries result(window_.shrunk(1));
  if (result.window_.empty()) {
    throw WindowExhaustion("window exhausted by differentiation");
  }
  const bool in_z = which == Var::z;
  for (const auto& [key, coeff] : coeffs_) {
    const int exponent = in_z ? key.first : key.second;
    const int ze = key.first - (in_z ? 1 : 0);
    const int we = key.second - (in_z ? 0 : 1);
    result.add_term(ze, we, coeff.scaled(Rational(exponent)));
  }
  return result;
}

BiSeries BiSeries::swapped() const {
  BiSeries result(window_);
  for (const auto& [key, coeff] : coeffs_) {
    result.add_term(key.second, key.first, coeff);
  }
  return result;
}

bool BiSeries::equal_on_shared_window(const BiSeries& other) const {
  const Window shared = intersect(window_, other.window_);
  if (shared.empty()) {
    throw WindowExhaustion("no shared window to compare on");
  }
  for (const auto& [key, coeff] : coeffs_) {
    if (shared.contains(key.first, key.second) &&
        other.coefficient(key.first, key.second) != coeff) {
      return false;
    }
  }
  for (const auto& [key, coeff] : other.coeffs_) {
    if (shared.contains(key.first, key.second) &&
        coefficient(key.first, key.second) != coeff) {
      return false;
    }
  }
  return true;
}

LaurentPoly BiSeries::residue_z() const {
  if (window_.bound() < 1) {
    throw WindowExhaustion("residue in z needs a window of at least 1");
  }
  LaurentPoly result(Var::w);
  for (const auto& [key, coeff] : coeffs_) {
    if (key.first == -1) {
      result.add_term(key.second, coeff);
    }
  }
  return result;
}

std::string BiSeries::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [key, coeff] : coeffs_) {
    if (!out.empty()) {
      out += " + ";
    }
    out += "(" + coeff.to_string() + ")*z^" + std::to_string(key.first) + "*w^" +
           std::to_string(key.second);
  }
  return out;
}

}  // namespace virasoro
