#include "virasoro/errors.hpp"
#include "virasoro/generate.hpp"
#include "virasoro/witt.hpp"

#include <doctest.h>

using namespace virasoro;

namespace {

WittElement random_witt(SplitMix& rng, int bound, int terms = 3) {
  WittElement result;
  for (int i = 0; i < terms; ++i) {
    result.add(rng.range(-bound, bound), random_scalar(rng, 0));
  }
  return result;
}

}  // namespace

TEST_CASE("vector field brackets") {
  // [L_1, L_-1] = 2 L_0 in the vector-field picture.
  CHECK(vf_bracket(witt_basis_field(1), witt_basis_field(-1)) ==
        witt_basis_field(0).scaled(CentralScalar(2)));

  // [z d/dz, z^n d/dz] = (n-1) z^n d/dz by the product rule.
  const VectorField euler(LaurentPoly::monomial(Var::z, 1));
  for (int n = -5; n <= 5; ++n) {
    const VectorField zn(LaurentPoly::monomial(Var::z, n));
    CHECK(vf_bracket(euler, zn) ==
          VectorField(LaurentPoly::monomial(Var::z, n, CentralScalar(Rational(n - 1)))));
  }

  SplitMix rng(61);
  for (int i = 0; i < 30; ++i) {
    const VectorField a(random_laurent(rng, Var::z, 5, 3, 0));
    CHECK(vf_bracket(a, a).is_zero());
    const VectorField b(random_laurent(rng, Var::z, 5, 3, 0));
    CHECK(vf_bracket(a, b) + vf_bracket(b, a) == VectorField(LaurentPoly(Var::z)));
  }
}

TEST_CASE("mode brackets") {
  CHECK(witt_bracket(WittElement::basis(1), WittElement::basis(-1)) ==
        WittElement::basis(0, CentralScalar(2)));
  CHECK(witt_bracket(WittElement::basis(0), WittElement::basis(0)).is_zero());
  CHECK(witt_bracket(WittElement::basis(2), WittElement::basis(3)) ==
        WittElement::basis(5, CentralScalar(-1)));

  SplitMix rng(67);
  for (int i = 0; i < 30; ++i) {
    const WittElement x = random_witt(rng, 6);
    const WittElement y = random_witt(rng, 6);
    CHECK(witt_bracket(x, x).is_zero());
    CHECK(witt_bracket(x, y) + witt_bracket(y, x) == WittElement());
  }
}

TEST_CASE("mode and vector-field pictures share structure constants") {
  CHECK(mode_vf_iso_check(Window(6)));
  CHECK(mode_vf_iso_check(Window(1)));

  // Flipping the basis sign flips the structure constants.
  const auto flipped = [](int j) {
    return VectorField(LaurentPoly::monomial(Var::z, j + 1));
  };
  bool all_match = true;
  for (int m = -3; m <= 3 && all_match; ++m) {
    for (int n = -3; n <= 3 && all_match; ++n) {
      all_match = vf_bracket(flipped(m), flipped(n)) ==
                  flipped(m + n).scaled(CentralScalar(Rational(m - n)));
    }
  }
  CHECK_FALSE(all_match);
}

TEST_CASE("diagonal cocycle storage is structurally odd") {
  const DiagonalCocycle omega = DiagonalCocycle::virasoro(8);
  CHECK(omega.f(0).is_zero());
  CHECK(omega.f(2) == CentralScalar(make_rational(1, 2)));
  CHECK(omega.f(-2) == CentralScalar(make_rational(-1, 2)));
  CHECK(omega.f(3) == CentralScalar(2));
  for (int m = 1; m <= 8; ++m) {
    CHECK(omega.f(m) + omega.f(-m) == CentralScalar());
  }
  CHECK_THROWS_AS(omega.f(9), WindowExhaustion);
  CHECK_FALSE(omega.value(9, -9).has_value());
  CHECK(omega.value(3, -2) == CentralScalar());

  CHECK_THROWS_AS(DiagonalCocycle(4, {{5, CentralScalar(1)}}), InvalidInput);
  CHECK_THROWS_AS(DiagonalCocycle(4, {{0, CentralScalar(1)}}), InvalidInput);
}

TEST_CASE("virasoro bracket on elements") {
  const DiagonalCocycle omega = DiagonalCocycle::virasoro(8);

  // [L_2, L_-2] = 4 L_0 + (c/2) center.
  const VirasoroElement got =
      virasoro_bracket(VirasoroElement::basis(2), VirasoroElement::basis(-2), omega);
  CHECK(got.witt() == WittElement::basis(0, CentralScalar(4)));
  CHECK(got.central() == CentralScalar::c().scaled(make_rational(1, 2)));

  // Central inputs are inert.
  const VirasoroElement center = VirasoroElement::center(CentralScalar(7));
  CHECK(virasoro_bracket(VirasoroElement::basis(3), center, omega).is_zero());
  CHECK(virasoro_bracket(center, center, omega).is_zero());

  // The zero form recovers the base bracket.
  const DiagonalCocycle zero(8);
  SplitMix rng(71);
  for (int i = 0; i < 20; ++i) {
    const WittElement x = random_witt(rng, 4);
    const WittElement y = random_witt(rng, 4);
    const VirasoroElement bracket = virasoro_bracket(
        VirasoroElement(x, CentralScalar()), VirasoroElement(y, CentralScalar()), zero);
    CHECK(bracket.witt() == witt_bracket(x, y));
    CHECK(bracket.central().is_zero());
  }
}

TEST_CASE("jacobi on the base algebra") {
  const JacobiResult plain = jacobi_check(witt_basis_bracket(Window(6)), Window(6));
  CHECK(plain.holds);
  CHECK(plain.checked > 0);
  CHECK(plain.skipped > 0);  // triples whose inner sum leaves the window
}

TEST_CASE("jacobi on the extension with the normalized form") {
  const Window window(8);
  const JacobiResult extended = jacobi_check(
      virasoro_basis_bracket(window, DiagonalCocycle::virasoro(8)), window);
  CHECK(extended.holds);
  CHECK(extended.checked > 0);
}

TEST_CASE("a quintic diagonal form breaks jacobi with a witness") {
  const Window window(8);
  const DiagonalCocycle quintic = DiagonalCocycle::from_formula(8, [](int m) {
    return CentralScalar(Rational(BigInt(m) * m * m * m * m));
  });
  const JacobiResult result =
      jacobi_check(virasoro_basis_bracket(window, quintic), window);
  CHECK_FALSE(result.holds);
  REQUIRE(result.counterexample.has_value());
  const auto [m, n, p] = *result.counterexample;
  CHECK(m + n + p == 0);  // only balanced triples see the center
}
