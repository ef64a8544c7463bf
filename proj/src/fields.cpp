#include "virasoro/fields.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

FieldSymbol energy_momentum() {
  return FieldSymbol{"T", 2};
}

namespace {

std::string mode_name(const FieldSymbol& symbol, int index) {
  // Modes of the energy-momentum tensor carry their traditional letter.
  const std::string base = symbol.name == "T" ? "L" : symbol.name;
  return base + "_" + (index < 0 ? "(" + std::to_string(index) + ")"
                                 : std::to_string(index));
}

}  // namespace

FieldPolynomial FieldPolynomial::constant(CentralScalar value, int w_exponent) {
  FieldPolynomial result;
  result.add({std::nullopt, 0, w_exponent}, value);
  return result;
}

FieldPolynomial FieldPolynomial::of(const FieldSymbol& symbol, int derivative_order,
                                    int w_exponent, CentralScalar scale) {
  if (derivative_order < 0) {
    throw InvalidInput("negative derivative order");
  }
  FieldPolynomial result;
  result.add({symbol, derivative_order, w_exponent}, scale);
  return result;
}

std::vector<FieldTerm> FieldPolynomial::terms() const {
  std::vector<FieldTerm> result;
  result.reserve(terms_.size());
  for (const auto& [key, scalar] : terms_) {
    const auto& [symbol, order, exponent] = key;
    result.push_back(FieldTerm{scalar, order, symbol, exponent});
  }
  return result;
}

void FieldPolynomial::add(const Key& key, const CentralScalar& value) {
  if (value.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

FieldPolynomial& FieldPolynomial::operator+=(const FieldPolynomial& other) {
  for (const auto& [key, value] : other.terms_) {
    add(key, value);
  }
  return *this;
}

FieldPolynomial& FieldPolynomial::operator-=(const FieldPolynomial& other) {
  for (const auto& [key, value] : other.terms_) {
    add(key, -value);
  }
  return *this;
}

FieldPolynomial FieldPolynomial::scaled(const CentralScalar& factor) const {
  FieldPolynomial result;
  for (const auto& [key, value] : terms_) {
    result.add(key, value * factor);
  }
  return result;
}

FieldPolynomial FieldPolynomial::shifted(int amount) const {
  FieldPolynomial result;
  for (const auto& [key, value] : terms_) {
    const auto& [symbol, order, exponent] = key;
    result.add({symbol, order, exponent + amount}, value);
  }
  return result;
}

FieldPolynomial FieldPolynomial::derivative() const {
  FieldPolynomial result;
  for (const auto& [key, value] : terms_) {
    const auto& [symbol, order, exponent] = key;
    if (exponent != 0) {
      result.add({symbol, order, exponent - 1}, value.scaled(Rational(exponent)));
    }
    if (symbol.has_value()) {
      result.add({symbol, order + 1, exponent}, value);
    }
  }
  return result;
}

FieldPolynomial FieldPolynomial::divided_derivative(int j) const {
  if (j < 0) {
    throw InvalidInput("negative derivative order");
  }
  FieldPolynomial result = *this;
  Rational factorial = 1;
  for (int i = 1; i <= j; ++i) {
    factorial *= i;
    result = result.derivative();
  }
  return result.scaled(CentralScalar(Rational(1) / factorial));
}

int term_weight(const FieldTerm& term) {
  const int base = term.symbol.has_value() ? term.symbol->weight : 0;
  return base + term.derivative_order - term.w_exponent;
}

std::optional<int> FieldPolynomial::homogeneous_weight() const {
  std::optional<int> weight;
  for (const auto& term : terms()) {
    const int w = term_weight(term);
    if (weight.has_value() && *weight != w) {
      return std::nullopt;
    }
    weight = w;
  }
  return weight;
}

std::string FieldPolynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& term : terms()) {
    std::string body;
    if (term.symbol.has_value()) {
      for (int i = 0; i < term.derivative_order; ++i) {
        body += "d";
      }
      body += term.symbol->name + "(w)";
    }
    if (term.w_exponent != 0) {
      std::string power = "w";
      if (term.w_exponent != 1) {
        power += "^" + std::to_string(term.w_exponent);
      }
      body = body.empty() ? power : power + "*" + body;
    }
    std::string scalar = term.scalar.is_rational()
                             ? rational_to_display(term.scalar.rational_part())
                             : "(" + term.scalar.to_string() + ")";
    std::string rendered;
    if (body.empty()) {
      rendered = term.scalar.is_rational() ? scalar : term.scalar.to_string();
    } else if (scalar == "1") {
      rendered = body;
    } else if (scalar == "-1") {
      rendered = "-" + body;
    } else {
      rendered = scalar + "*" + body;
    }
    if (!out.empty()) {
      if (rendered.front() == '-') {
        out += " - ";
        rendered.erase(rendered.begin());
      } else {
        out += " + ";
      }
    }
    out += rendered;
  }
  return out;
}

ModeElement& ModeElement::add_mode(const FieldSymbol& symbol, int index,
                                   const CentralScalar& value) {
  if (value.is_zero()) {
    return *this;
  }
  auto [it, inserted] = modes_.emplace(std::pair{symbol, index}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      modes_.erase(it);
    }
  }
  return *this;
}

ModeElement& ModeElement::add_central(const CentralScalar& value) {
  central_ += value;
  return *this;
}

CentralScalar ModeElement::mode(const FieldSymbol& symbol, int index) const {
  const auto it = modes_.find({symbol, index});
  return it == modes_.end() ? CentralScalar() : it->second;
}

ModeElement& ModeElement::operator+=(const ModeElement& other) {
  for (const auto& [key, value] : other.modes_) {
    add_mode(key.first, key.second, value);
  }
  central_ += other.central_;
  return *this;
}

ModeElement& ModeElement::operator-=(const ModeElement& other) {
  for (const auto& [key, value] : other.modes_) {
    add_mode(key.first, key.second, -value);
  }
  central_ -= other.central_;
  return *this;
}

ModeElement ModeElement::scaled(const CentralScalar& factor) const {
  ModeElement result;
  for (const auto& [key, value] : modes_) {
    result.add_mode(key.first, key.second, value * factor);
  }
  result.central_ = central_ * factor;
  return result;
}

std::string ModeElement::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  auto append = [&out](std::string rendered) {
    if (!out.empty()) {
      if (rendered.front() == '-') {
        out += " - ";
        rendered.erase(rendered.begin());
      } else {
        out += " + ";
      }
    }
    out += rendered;
  };
  for (const auto& [key, value] : modes_) {
    const std::string name = mode_name(key.first, key.second);
    if (value == CentralScalar(1)) {
      append(name);
    } else if (value == CentralScalar(-1)) {
      append("-" + name);
    } else if (value.is_rational()) {
      append(rational_to_display(value.rational_part()) + "*" + name);
    } else {
      append("(" + value.to_string() + ")*" + name);
    }
  }
  if (!central_.is_zero()) {
    append(central_.to_string());
  }
  return out;
}

ModeElement mode_coefficient(const FieldPolynomial& p, int k) {
  ModeElement result;
  for (const auto& term : p.terms()) {
    if (!term.symbol.has_value()) {
      if (term.w_exponent == -k - 1) {
        result.add_central(term.scalar);
      }
      continue;
    }
    // d^order F contributes F_p at w^(-p-weight-order); solve for the p
    // that lands the term, together with w^e, on the slot w^(-k-1).
    const int weight = term.symbol->weight;
    const int p_index = k + 1 - weight - term.derivative_order + term.w_exponent;
    Rational falling = 1;
    for (int i = 0; i < term.derivative_order; ++i) {
      falling *= Rational(-p_index - weight - i);
    }
    result.add_mode(*term.symbol, p_index, term.scalar.scaled(falling));
  }
  return result;
}

FieldPolynomial apply_grading(const FieldPolynomial& p) {
  const auto weight = p.homogeneous_weight();
  if (!weight.has_value()) {
    throw InvalidInput("grading operator needs a homogeneous polynomial");
  }
  return p.scaled(CentralScalar(Rational(*weight))) + p.derivative().shifted(1);
}

bool h_consistency_check(const FieldPolynomial& p, int mode_window) {
  if (p.is_zero()) {
    return true;
  }
  const FieldPolynomial graded = apply_grading(p);
  for (int k = -mode_window; k <= mode_window; ++k) {
    // Slot w^(-k-1) of H p must equal the mode-wise action H F_p = -p F_p
    // applied inside slot k.
    const ModeElement slot = mode_coefficient(p, k);
    ModeElement direct;
    for (const auto& [key, value] : slot.modes()) {
      direct.add_mode(key.first, key.second, value.scaled(Rational(-key.second)));
    }
    if (mode_coefficient(graded, k) != direct) {
      return false;
    }
  }
  return true;
}

}  // namespace virasoro
