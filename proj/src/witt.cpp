#include "virasoro/witt.hpp"

#include "virasoro/errors.hpp"

namespace virasoro {

VectorField::VectorField(LaurentPoly coefficient) : coeff_(std::move(coefficient)) {
  if (coeff_.variable() != Var::z) {
    throw InvalidInput("vector fields carry a coefficient in z");
  }
}

VectorField VectorField::operator+(const VectorField& other) const {
  return VectorField(coeff_ + other.coeff_);
}

VectorField VectorField::operator-(const VectorField& other) const {
  return VectorField(coeff_ - other.coeff_);
}

VectorField VectorField::scaled(const CentralScalar& factor) const {
  return VectorField(coeff_.scaled(factor));
}

std::string VectorField::to_string() const {
  return "(" + coeff_.to_string() + ") d/dz";
}

VectorField witt_basis_field(int j) {
  return VectorField(LaurentPoly::monomial(Var::z, j + 1, CentralScalar(-1)));
}

VectorField vf_bracket(const VectorField& a, const VectorField& b) {
  const LaurentPoly& f = a.coefficient();
  const LaurentPoly& g = b.coefficient();
  return VectorField(f * derivative(g) - g * derivative(f));
}

WittElement WittElement::basis(int n, CentralScalar coeff) {
  WittElement result;
  result.add(n, coeff);
  return result;
}

CentralScalar WittElement::mode(int n) const {
  const auto it = modes_.find(n);
  return it == modes_.end() ? CentralScalar() : it->second;
}

WittElement& WittElement::add(int n, const CentralScalar& coeff) {
  if (coeff.is_zero()) {
    return *this;
  }
  auto [it, inserted] = modes_.emplace(n, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      modes_.erase(it);
    }
  }
  return *this;
}

WittElement& WittElement::operator+=(const WittElement& other) {
  for (const auto& [n, coeff] : other.modes_) {
    add(n, coeff);
  }
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& other) {
  for (const auto& [n, coeff] : other.modes_) {
    add(n, -coeff);
  }
  return *this;
}

WittElement WittElement::scaled(const CentralScalar& factor) const {
  WittElement result;
  for (const auto& [n, coeff] : modes_) {
    result.add(n, coeff * factor);
  }
  return result;
}

std::string WittElement::to_string() const {
  if (modes_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [n, coeff] : modes_) {
    std::string name = "L_" + (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n));
    std::string rendered;
    if (coeff == CentralScalar(1)) {
      rendered = name;
    } else if (coeff == CentralScalar(-1)) {
      rendered = "-" + name;
    } else if (coeff.is_rational()) {
      rendered = rational_to_display(coeff.rational_part()) + "*" + name;
    } else {
      rendered = "(" + coeff.to_string() + ")*" + name;
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

WittElement witt_bracket(const WittElement& x, const WittElement& y) {
  WittElement result;
  for (const auto& [m, cm] : x.modes()) {
    for (const auto& [n, cn] : y.modes()) {
      result.add(m + n, (cm * cn).scaled(Rational(m - n)));
    }
  }
  return result;
}

VirasoroElement::VirasoroElement(WittElement witt, CentralScalar central)
    : witt_(std::move(witt)), central_(std::move(central)) {}

VirasoroElement VirasoroElement::basis(int n, CentralScalar coeff) {
  return VirasoroElement(WittElement::basis(n, std::move(coeff)), CentralScalar());
}

VirasoroElement VirasoroElement::center(CentralScalar value) {
  return VirasoroElement(WittElement(), std::move(value));
}

VirasoroElement VirasoroElement::operator+(const VirasoroElement& other) const {
  return VirasoroElement(witt_ + other.witt_, central_ + other.central_);
}

VirasoroElement VirasoroElement::operator-(const VirasoroElement& other) const {
  return VirasoroElement(witt_ - other.witt_, central_ - other.central_);
}

VirasoroElement VirasoroElement::scaled(const CentralScalar& factor) const {
  return VirasoroElement(witt_.scaled(factor), central_ * factor);
}

std::string VirasoroElement::to_string() const {
  if (is_zero()) {
    return "0";
  }
  if (central_.is_zero()) {
    return witt_.to_string();
  }
  if (witt_.is_zero()) {
    return central_.to_string();
  }
  return witt_.to_string() + " + " + central_.to_string();
}

DiagonalCocycle::DiagonalCocycle(int bound) : bound_(bound) {
  if (bound < 0) {
    throw InvalidInput("cocycle bound must be non-negative");
  }
}

DiagonalCocycle::DiagonalCocycle(int bound, std::map<int, CentralScalar> positive_values)
    : DiagonalCocycle(bound) {
  for (auto& [m, value] : positive_values) {
    if (m <= 0 || m > bound) {
      throw InvalidInput("diagonal values are stored for 0 < m <= bound");
    }
    if (!value.is_zero()) {
      values_.emplace(m, std::move(value));
    }
  }
}

DiagonalCocycle DiagonalCocycle::virasoro(int bound) {
  return from_formula(bound, [](int m) {
    return CentralScalar(make_rational(BigInt(m) * (m - 1) * (m + 1), 12));
  });
}

DiagonalCocycle DiagonalCocycle::from_formula(
    int bound, const std::function<CentralScalar(int)>& f) {
  std::map<int, CentralScalar> values;
  for (int m = 1; m <= bound; ++m) {
    values.emplace(m, f(m));
  }
  return DiagonalCocycle(bound, std::move(values));
}

CentralScalar DiagonalCocycle::f(int m) const {
  if (std::abs(m) > bound_) {
    throw WindowExhaustion("cocycle argument outside the window");
  }
  if (m == 0) {
    return CentralScalar();
  }
  const auto it = values_.find(std::abs(m));
  if (it == values_.end()) {
    return CentralScalar();
  }
  return m > 0 ? it->second : -it->second;
}

std::optional<CentralScalar> DiagonalCocycle::value(int m, int n) const {
  if (std::abs(m) > bound_ || std::abs(n) > bound_) {
    return std::nullopt;
  }
  if (m + n != 0) {
    return CentralScalar();
  }
  return f(m);
}

VirasoroElement virasoro_bracket(const VirasoroElement& x, const VirasoroElement& y,
                                 const DiagonalCocycle& omega) {
  WittElement mode_part = witt_bracket(x.witt(), y.witt());
  CentralScalar central;
  for (const auto& [m, cm] : x.witt().modes()) {
    for (const auto& [n, cn] : y.witt().modes()) {
      const auto value = omega.value(m, n);
      if (!value.has_value()) {
        throw WindowExhaustion("cocycle evaluation outside the window");
      }
      central += cm * cn * *value * CentralScalar::c();
    }
  }
  return VirasoroElement(std::move(mode_part), std::move(central));
}

BasisBracket witt_basis_bracket(Window window) {
  const int bound = window.bound();
  return [bound](int m, int n) -> std::optional<VirasoroElement> {
    if (std::abs(m) > bound || std::abs(n) > bound) {
      return std::nullopt;
    }
    return VirasoroElement::basis(m + n, CentralScalar(Rational(m - n)));
  };
}

BasisBracket virasoro_basis_bracket(Window window, DiagonalCocycle omega) {
  const int bound = window.bound();
  return [bound, omega = std::move(omega)](
             int m, int n) -> std::optional<VirasoroElement> {
    if (std::abs(m) > bound || std::abs(n) > bound) {
      return std::nullopt;
    }
    const auto value = omega.value(m, n);
    if (!value.has_value()) {
      return std::nullopt;
    }
    return VirasoroElement(WittElement::basis(m + n, CentralScalar(Rational(m - n))),
                           *value * CentralScalar::c());
  };
}

namespace {

// [[L_a, L_b], L_p] evaluated through the basis bracket; the central part of
// the inner bracket is inert. Nullopt when any needed cell is out of window.
std::optional<VirasoroElement> double_bracket(const BasisBracket& bracket, int a,
                                              int b, int p) {
  const auto inner = bracket(a, b);
  if (!inner.has_value()) {
    return std::nullopt;
  }
  VirasoroElement total;
  for (const auto& [k, coeff] : inner->witt().modes()) {
    const auto outer = bracket(k, p);
    if (!outer.has_value()) {
      return std::nullopt;
    }
    total = total + outer->scaled(coeff);
  }
  return total;
}

}  // namespace

JacobiResult jacobi_check(const BasisBracket& bracket, Window window) {
  JacobiResult result;
  const int bound = window.bound();
  auto offer = [&result](const std::array<int, 3>& candidate) {
    auto radius = [](const std::array<int, 3>& t) {
      return std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])});
    };
    if (!result.counterexample.has_value() ||
        radius(candidate) < radius(*result.counterexample) ||
        (radius(candidate) == radius(*result.counterexample) &&
         candidate < *result.counterexample)) {
      result.counterexample = candidate;
    }
  };
  for (int m = -bound; m <= bound; ++m) {
    for (int n = -bound; n <= bound; ++n) {
      for (int p = -bound; p <= bound; ++p) {
        const auto term_mn = double_bracket(bracket, m, n, p);
        const auto term_np = double_bracket(bracket, n, p, m);
        const auto term_pm = double_bracket(bracket, p, m, n);
        if (!term_mn.has_value() || !term_np.has_value() || !term_pm.has_value()) {
          ++result.skipped;
          continue;
        }
        ++result.checked;
        if (!(*term_mn + *term_np + *term_pm).is_zero()) {
          result.holds = false;
          offer({m, n, p});
        }
      }
    }
  }
  return result;
}

bool mode_vf_iso_check(Window window) {
  const int bound = window.bound();
  for (int m = -bound; m <= bound; ++m) {
    for (int n = -bound; n <= bound; ++n) {
      const VectorField lhs = vf_bracket(witt_basis_field(m), witt_basis_field(n));
      const VectorField rhs =
          witt_basis_field(m + n).scaled(CentralScalar(Rational(m - n)));
      if (lhs != rhs) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace virasoro
