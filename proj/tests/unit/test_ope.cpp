#include "virasoro/errors.hpp"
#include "virasoro/ope.hpp"

#include <doctest.h>

using namespace virasoro;

namespace {

const FieldSymbol T = energy_momentum();

CentralScalar half_c() {
  return CentralScalar::c().scaled(make_rational(1, 2));
}

// Independent oracle for the mode bracket: the closed form
// [L_m, L_n] = (m-n) L_{m+n} + c m(m^2-1)/12 delta_{m+n,0}.
ModeElement closed_form_bracket(int m, int n) {
  ModeElement expected;
  expected.add_mode(T, m + n, CentralScalar(Rational(m - n)));
  if (m + n == 0) {
    expected.add_central(
        CentralScalar::c().scaled(make_rational(BigInt(m) * (m - 1) * (m + 1), 12)));
  }
  return expected;
}

}  // namespace

TEST_CASE("the canonical TT OPE") {
  const OpeData tt = OpeData::tt();
  CHECK(tt.order() == 4);
  CHECK(tt.coefficient(3) == FieldPolynomial::constant(half_c()));
  CHECK(tt.coefficient(2).is_zero());
  CHECK(tt.coefficient(1) == FieldPolynomial::of(T, 0, 0, CentralScalar(2)));
  CHECK(tt.coefficient(0) == FieldPolynomial::of(T, 1));
  CHECK(tt.display() == "1/2*c / (z-w)^4 + 2*T(w) / (z-w)^2 + dT(w) / (z-w)");
}

TEST_CASE("weight bookkeeping validates OPE data") {
  // Every summand of the TT OPE has weight 4, checked at construction.
  CHECK_NOTHROW(OpeData(T, T, OpeData::tt().singular()));
  // A slot of the wrong weight is rejected.
  std::map<int, FieldPolynomial> bad;
  bad.emplace(2, FieldPolynomial::of(T));
  CHECK_THROWS_AS(OpeData(T, T, std::move(bad)), InvalidInput);
  // The unchecked path admits it for probing.
  std::map<int, FieldPolynomial> probe;
  probe.emplace(2, FieldPolynomial::of(T));
  CHECK_NOTHROW(OpeData::unchecked(T, T, std::move(probe)));
}

TEST_CASE("distribution transfer and mode-level round trip") {
  const OpeData tt = OpeData::tt();
  const FieldDistribution dist = ope_to_distribution(tt);
  CHECK(dist.term(3) == tt.coefficient(3));
  CHECK(dist.term(1) == tt.coefficient(1));
  CHECK(dist.term(0) == tt.coefficient(0));
  CHECK(ope_to_distribution(OpeData::unchecked(T, T, {})).is_zero());

  // Realize over modes and pull each order back by residues.
  const Window window(8);
  const ModeTable table = realize_modes(dist, window);
  for (const int j : {0, 1, 3}) {
    const auto extracted = extract_term_modes(table, j);
    for (int n = -(8 - j); n <= 8 - j; ++n) {
      const auto it = extracted.find(n);
      const ModeElement got = it == extracted.end() ? ModeElement() : it->second;
      CHECK(got == mode_coefficient(tt.coefficient(j), n));
    }
  }
  // The second order is absent.
  for (const auto& [n, value] : extract_term_modes(table, 2)) {
    CHECK(value.is_zero());
  }
}

TEST_CASE("mode bracket reproduces the closed form") {
  const OpeData tt = OpeData::tt();

  ModeElement two_left;
  two_left.add_mode(T, 0, CentralScalar(4));
  two_left.add_central(half_c());
  CHECK(mode_bracket_from_ope(tt, 2, -2) == two_left);

  ModeElement one_left;
  one_left.add_mode(T, 0, CentralScalar(2));
  CHECK(mode_bracket_from_ope(tt, 1, -1) == one_left);
  CHECK(mode_bracket_from_ope(tt, 1, -1).central().is_zero());

  for (int m = -8; m <= 8; ++m) {
    for (int n = -8; n <= 8; ++n) {
      CHECK(mode_bracket_from_ope(tt, m, n) == closed_form_bracket(m, n));
    }
  }
}

TEST_CASE("mode-field brackets give the defining relations") {
  const OpeData tt = OpeData::tt();
  CHECK(mode_field_bracket(tt, -1) == FieldPolynomial::of(T, 1));
  CHECK(mode_field_bracket(tt, 0) ==
        FieldPolynomial::of(T, 1, 1) + FieldPolynomial::of(T, 0, 0, CentralScalar(2)));
  CHECK(mode_field_bracket(OpeData::unchecked(T, T, {}), 5).is_zero());
}

TEST_CASE("residue pairing agrees with the coefficient route") {
  const OpeData tt = OpeData::tt();
  for (int m = -8; m <= 8; ++m) {
    for (int n = -8; n <= 8; ++n) {
      CHECK(residue_pairing_bracket(tt, m, n) == mode_bracket_from_ope(tt, m, n));
    }
  }
  // Central term for (m, -m) is c m(m-1)(m+1)/12; nothing survives otherwise.
  for (int m = -8; m <= 8; ++m) {
    const CentralScalar central = residue_pairing_bracket(tt, m, -m).central();
    CHECK(central ==
          CentralScalar::c().scaled(make_rational(BigInt(m) * (m - 1) * (m + 1), 12)));
    CHECK(residue_pairing_bracket(tt, m, 1 - m).central().is_zero());
  }
}

TEST_CASE("bracket antisymmetry including central parts") {
  const OpeData tt = OpeData::tt();
  for (int m = -8; m <= 8; ++m) {
    for (int n = -8; n <= 8; ++n) {
      const ModeElement forward = residue_pairing_bracket(tt, m, n);
      const ModeElement backward = residue_pairing_bracket(tt, n, m);
      CHECK((forward + backward).is_zero());
    }
  }
}

TEST_CASE("weight bound for constant top coefficients") {
  CHECK(weight_bound_check(OpeData::tt()));  // N = 4, weights sum to 4
  // Order five with a constant top breaks the bound.
  std::map<int, FieldPolynomial> five;
  five.emplace(4, FieldPolynomial::constant(CentralScalar(1)));
  CHECK_FALSE(weight_bound_check(OpeData::unchecked(T, T, std::move(five))));
  // Non-constant top: vacuously fine.
  std::map<int, FieldPolynomial> monomial_top;
  monomial_top.emplace(4, FieldPolynomial::constant(CentralScalar(1), 1));
  CHECK(weight_bound_check(OpeData::unchecked(T, T, std::move(monomial_top))));
  CHECK(weight_bound_check(OpeData::unchecked(T, T, {})));
}

TEST_CASE("identification of the order-two coefficient") {
  CHECK(verify_t_identification(OpeData::tt()));
  CHECK(verify_t_identification(OpeData::tt_with_c1(FieldPolynomial::of(T))));
  CHECK(OpeData::tt_with_c1(FieldPolynomial::of(T)) == OpeData::tt());

  // Doubling the candidate breaks the scaling relation.
  const FieldPolynomial doubled = FieldPolynomial::of(T, 0, 0, CentralScalar(2));
  CHECK_FALSE(verify_t_identification(OpeData::tt_with_c1(doubled)));

  // An additive constant survives differentiation but not the scaling
  // relation.
  const FieldPolynomial offset =
      FieldPolynomial::of(T) + FieldPolynomial::constant(CentralScalar(1));
  CHECK_FALSE(verify_t_identification(OpeData::tt_with_c1(offset)));
}
