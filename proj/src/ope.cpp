#include "virasoro/ope.hpp"

#include "virasoro/errors.hpp"
#include "virasoro/laurent.hpp"

namespace virasoro {

OpeData::OpeData(FieldSymbol left, FieldSymbol right,
                 std::map<int, FieldPolynomial> singular)
    : left_(std::move(left)), right_(std::move(right)) {
  const int target = left_.weight + right_.weight;
  for (auto& [j, coeff] : singular) {
    if (j < 0) {
      throw InvalidInput("negative pole order in an OPE");
    }
    if (coeff.is_zero()) {
      continue;
    }
    const auto weight = coeff.homogeneous_weight();
    if (!weight.has_value() || *weight + j + 1 != target) {
      throw InvalidInput("OPE summand at order " + std::to_string(j) +
                         " breaks weight bookkeeping");
    }
    singular_.emplace(j, std::move(coeff));
  }
}

OpeData::OpeData(Unvalidated, FieldSymbol left, FieldSymbol right,
                 std::map<int, FieldPolynomial> singular)
    : left_(std::move(left)), right_(std::move(right)) {
  for (auto& [j, coeff] : singular) {
    if (j < 0) {
      throw InvalidInput("negative pole order in an OPE");
    }
    if (!coeff.is_zero()) {
      singular_.emplace(j, std::move(coeff));
    }
  }
}

OpeData OpeData::unchecked(FieldSymbol left, FieldSymbol right,
                           std::map<int, FieldPolynomial> singular) {
  return OpeData(Unvalidated{}, std::move(left), std::move(right),
                 std::move(singular));
}

OpeData OpeData::tt() {
  const FieldSymbol t = energy_momentum();
  std::map<int, FieldPolynomial> singular;
  singular.emplace(3, FieldPolynomial::constant(
                          CentralScalar::c().scaled(make_rational(1, 2))));
  singular.emplace(1, FieldPolynomial::of(t, 0, 0, CentralScalar(2)));
  singular.emplace(0, FieldPolynomial::of(t, 1));
  return OpeData(t, t, std::move(singular));
}

OpeData OpeData::tt_with_c1(const FieldPolynomial& f) {
  const FieldSymbol t = energy_momentum();
  std::map<int, FieldPolynomial> singular;
  singular.emplace(3, FieldPolynomial::constant(
                          CentralScalar::c().scaled(make_rational(1, 2))));
  singular.emplace(1, f.scaled(CentralScalar(2)));
  singular.emplace(0, f.derivative());
  return OpeData(Unvalidated{}, t, t, std::move(singular));
}

FieldPolynomial OpeData::coefficient(int j) const {
  const auto it = singular_.find(j);
  return it == singular_.end() ? FieldPolynomial() : it->second;
}

int OpeData::order() const {
  return singular_.empty() ? 0 : singular_.rbegin()->first + 1;
}

std::string OpeData::display() const {
  if (singular_.empty()) {
    return "0";
  }
  std::string out;
  for (auto it = singular_.rbegin(); it != singular_.rend(); ++it) {
    if (!out.empty()) {
      out += " + ";
    }
    const std::string pole =
        it->first == 0 ? "(z-w)" : "(z-w)^" + std::to_string(it->first + 1);
    out += it->second.to_string() + " / " + pole;
  }
  return out;
}

FieldDistribution::FieldDistribution(std::map<int, FieldPolynomial> terms) {
  for (auto& [j, coeff] : terms) {
    if (j < 0) {
      throw InvalidInput("negative delta-derivative order");
    }
    if (!coeff.is_zero()) {
      terms_.emplace(j, std::move(coeff));
    }
  }
}

FieldPolynomial FieldDistribution::term(int j) const {
  const auto it = terms_.find(j);
  return it == terms_.end() ? FieldPolynomial() : it->second;
}

FieldDistribution ope_to_distribution(const OpeData& ope) {
  return FieldDistribution(ope.singular());
}

ModeTable& ModeTable::add(int m, int n, const ModeElement& value) {
  if (value.is_zero() || !window_.contains(m, n)) {
    return *this;
  }
  auto [it, inserted] = cells_.emplace(std::pair{m, n}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      cells_.erase(it);
    }
  }
  return *this;
}

ModeElement ModeTable::at(int m, int n) const {
  const auto it = cells_.find({m, n});
  return it == cells_.end() ? ModeElement() : it->second;
}

ModeTable ModeTable::mul_zw_power(int steps) const {
  if (steps < 0) {
    throw InvalidInput("negative power of (z-w)");
  }
  ModeTable result = *this;
  for (int step = 0; step < steps; ++step) {
    ModeTable next(result.window_.shrunk(1));
    if (next.window_.empty()) {
      throw WindowExhaustion("window exhausted by (z-w) multiplication");
    }
    // In the z^(-m-1) w^(-n-1) indexing, multiplying by z lowers m and
    // multiplying by w lowers n.
    for (const auto& [key, value] : result.cells_) {
      next.add(key.first - 1, key.second, value);
      next.add(key.first, key.second - 1, value.scaled(CentralScalar(-1)));
    }
    result = std::move(next);
  }
  return result;
}

std::map<int, ModeElement> ModeTable::residue_row() const {
  if (window_.bound() < 0) {
    throw WindowExhaustion("empty window");
  }
  std::map<int, ModeElement> row;
  for (const auto& [key, value] : cells_) {
    if (key.first == 0) {  // z^(-m-1) with m = 0 is the residue slot
      row.emplace(key.second, value);
    }
  }
  return row;
}

ModeTable realize_modes(const FieldDistribution& d, Window window) {
  ModeTable result(window);
  const int bound = window.bound();
  for (const auto& [j, coeff] : d.terms()) {
    for (int m = -bound; m <= bound; ++m) {
      const Rational binom = gen_binomial(m, j);
      if (binom == 0) {
        continue;
      }
      // c_j(w) w^(m-j) contributes its mode k + (m - j) shift at cell (m, k').
      for (int n = -bound; n <= bound; ++n) {
        const ModeElement mode = mode_coefficient(coeff.shifted(m - j), n);
        result.add(m, n, mode.scaled(CentralScalar(binom)));
      }
    }
  }
  return result;
}

std::map<int, ModeElement> extract_term_modes(const ModeTable& table, int j) {
  return table.mul_zw_power(j).residue_row();
}

ModeElement mode_bracket_from_ope(const OpeData& ope, int m, int n) {
  const int ms = m + ope.left().weight - 1;
  const int ns = n + ope.right().weight - 1;
  ModeElement result;
  for (const auto& [j, coeff] : ope.singular()) {
    const Rational binom = gen_binomial(ms, j);
    if (binom == 0) {
      continue;
    }
    result += mode_coefficient(coeff, ms + ns - j).scaled(CentralScalar(binom));
  }
  return result;
}

FieldPolynomial mode_field_bracket(const OpeData& ope, int m) {
  const int ms = m + ope.left().weight - 1;
  FieldPolynomial result;
  for (const auto& [j, coeff] : ope.singular()) {
    const Rational binom = gen_binomial(ms, j);
    if (binom == 0) {
      continue;
    }
    result += coeff.shifted(ms - j).scaled(CentralScalar(binom));
  }
  return result;
}

ModeElement residue_pairing_bracket(const OpeData& ope, int m, int n) {
  const int ms = m + ope.left().weight - 1;
  const int ns = n + ope.right().weight - 1;
  const int order = ope.order();
  if (order == 0) {
    return ModeElement();
  }
  // z^ms = sum_i t_i(w) (z-w)^i; against c_j/(z-w)^(j+1) only i == j yields
  // a simple pole in z, leaving t_j(w) c_j(w).
  const auto taylor = taylor_about_w(ms, order - 1);
  FieldPolynomial integrand;
  for (const auto& [j, coeff] : ope.singular()) {
    for (const auto& [exponent, scalar] : taylor[static_cast<std::size_t>(j)].coefficients()) {
      integrand += coeff.shifted(exponent).scaled(scalar);
    }
  }
  // Close the w-contour: residue of w^ns * integrand.
  return mode_coefficient(integrand.shifted(ns), 0);
}

bool weight_bound_check(const OpeData& ope) {
  const int order = ope.order();
  if (order == 0) {
    return true;
  }
  const FieldPolynomial top = ope.coefficient(order - 1);
  for (const auto& term : top.terms()) {
    if (term.symbol.has_value() || term.w_exponent != 0) {
      return true;  // top coefficient not constant: nothing to check
    }
  }
  return ope.left().weight + ope.right().weight >= order;
}

bool verify_t_identification(const OpeData& ope) {
  const FieldSymbol t = energy_momentum();
  const FieldPolynomial t_field = FieldPolynomial::of(t);

  const FieldPolynomial translate = mode_field_bracket(ope, -1);
  const FieldPolynomial scale = mode_field_bracket(ope, 0);

  const FieldPolynomial expected_translate = t_field.derivative();
  const FieldPolynomial expected_scale =
      t_field.derivative().shifted(1) + t_field.scaled(CentralScalar(2));

  return translate == expected_translate && scale == expected_scale;
}

VirasoroElement to_virasoro(const ModeElement& element) {
  WittElement modes;
  for (const auto& [key, value] : element.modes()) {
    if (key.first != energy_momentum()) {
      throw InvalidInput("only energy-momentum modes map to the mode algebra");
    }
    modes.add(key.second, value);
  }
  return VirasoroElement(std::move(modes), element.central());
}

}  // namespace virasoro
