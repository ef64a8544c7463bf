#include "virasoro/delta.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

namespace {

void require_w_tag(const LaurentPoly& coeff) {
  if (coeff.variable() != Var::w) {
    throw InvalidInput("delta-expansion coefficients live in w");
  }
}

}  // namespace

DeltaExpansion& DeltaExpansion::set_term(int j, LaurentPoly coeff_in_w) {
  if (j < 0) {
    throw InvalidInput("negative delta-derivative order");
  }
  require_w_tag(coeff_in_w);
  if (coeff_in_w.is_zero()) {
    terms_.erase(j);
  } else {
    terms_.insert_or_assign(j, std::move(coeff_in_w));
  }
  return *this;
}

DeltaExpansion& DeltaExpansion::add_term(int j, const LaurentPoly& coeff_in_w) {
  return set_term(j, term(j) + coeff_in_w);
}

LaurentPoly DeltaExpansion::term(int j) const {
  const auto it = terms_.find(j);
  return it == terms_.end() ? LaurentPoly(Var::w) : it->second;
}

int DeltaExpansion::locality_order() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first + 1;
}

DeltaExpansion DeltaExpansion::operator+(const DeltaExpansion& other) const {
  DeltaExpansion result = *this;
  for (const auto& [j, coeff] : other.terms_) {
    result.add_term(j, coeff);
  }
  return result;
}

DeltaExpansion DeltaExpansion::operator-(const DeltaExpansion& other) const {
  DeltaExpansion result = *this;
  for (const auto& [j, coeff] : other.terms_) {
    result.add_term(j, coeff.scaled(CentralScalar(-1)));
  }
  return result;
}

DeltaExpansion DeltaExpansion::scaled(const CentralScalar& factor) const {
  DeltaExpansion result;
  for (const auto& [j, coeff] : terms_) {
    result.set_term(j, coeff.scaled(factor));
  }
  return result;
}

DeltaExpansion DeltaExpansion::mul_zw_power(int n) const {
  if (n < 0) {
    throw InvalidInput("negative power of (z-w)");
  }
  DeltaExpansion result;
  for (const auto& [j, coeff] : terms_) {
    if (j >= n) {
      result.add_term(j - n, coeff);
    }
  }
  return result;
}

std::string DeltaExpansion::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [j, coeff] : terms_) {
    if (!out.empty()) {
      out += " + ";
    }
    out += "(" + coeff.to_string() + ")*delta^(" + std::to_string(j) + ")";
  }
  return out;
}

BiSeries delta_derivative(int j, Window window) {
  if (j < 0) {
    throw InvalidInput("negative delta-derivative order");
  }
  BiSeries result(window);
  const int bound = window.bound();
  // One monomial per m: z^(-m-1) w^(m-j); keep those inside the box.
  for (int m = -bound - 1; m <= bound + 1 + j; ++m) {
    result.add_term(-m - 1, m - j, CentralScalar(gen_binomial(m, j)));
  }
  return result;
}

BiSeries expand_izw(int j, ExpansionSide side, Window window) {
  if (j < 0) {
    throw InvalidInput("negative pole order");
  }
  BiSeries result(window);
  const int bound = window.bound();
  for (int m = -bound - 1; m <= bound + 1 + j; ++m) {
    const bool in_range = side == ExpansionSide::zw ? m >= 0 : m < 0;
    if (!in_range) {
      continue;
    }
    Rational value = gen_binomial(m, j);
    if (side == ExpansionSide::wz) {
      value = -value;
    }
    result.add_term(-m - 1, m - j, CentralScalar(value));
  }
  return result;
}

LaurentPoly res_z_field(const LaurentPoly& f_in_z, Window window) {
  if (f_in_z.variable() != Var::z) {
    throw InvalidInput("res_z_field expects a polynomial in z");
  }
  const int reach = f_in_z.max_abs_exponent();
  if (window.bound() < std::max(2 * reach, 1)) {
    throw WindowExhaustion("window too small for the field's support");
  }
  return delta_derivative(0, window).multiplied_by(f_in_z).residue_z();
}

BiSeries realize(const DeltaExpansion& d, Window window) {
  BiSeries result(window);
  const int bound = window.bound();
  // Fill the whole box exactly: for fixed z-exponent -m-1, the term of order
  // j contributes gen_binomial(m, j) * c_e at w-exponent m - j + e.
  for (const auto& [j, coeff] : d.terms()) {
    for (int m = -bound - 1; m <= bound - 1; ++m) {
      const Rational binom = gen_binomial(m, j);
      if (binom == 0) {
        continue;
      }
      for (const auto& [e, scalar] : coeff.coefficients()) {
        result.add_term(-m - 1, m - j + e, scalar.scaled(binom));
      }
    }
  }
  return result;
}

DeltaExpansion project_pi(const BiSeries& a, int max_j) {
  if (max_j < 0) {
    throw InvalidInput("negative projection order");
  }
  if (max_j > a.window().bound() - 1) {
    throw WindowExhaustion("projection order exceeds the window guarantee");
  }
  DeltaExpansion result;
  for (int j = 0; j <= max_j; ++j) {
    result.set_term(j, a.mul_zw_power(j).residue_z());
  }
  return result;
}

CentralScalar coefficient_formula(const DeltaExpansion& d, int m, int n) {
  CentralScalar result;
  for (const auto& [j, coeff] : d.terms()) {
    // c^j_k is the coefficient of w^(-k-1); here k = m + n - j.
    const CentralScalar mode = coeff.coefficient(-(m + n - j) - 1);
    result += mode.scaled(gen_binomial(m, j));
  }
  return result;
}

bool is_local(const BiSeries& a, int n) {
  if (n < 1) {
    throw InvalidInput("locality order must be positive");
  }
  if (a.window().bound() <= n) {
    throw WindowExhaustion("window too small to witness locality");
  }
  return a.mul_zw_power(n).is_zero_on_window();
}

}  // namespace virasoro
