#include "virasoro/central_scalar.hpp"
#include "virasoro/errors.hpp"
#include "virasoro/generate.hpp"
#include "virasoro/laurent.hpp"
#include "virasoro/rational.hpp"

#include <doctest.h>

using namespace virasoro;

namespace {

LaurentPoly zp(int exponent, int coeff = 1) {
  return LaurentPoly::monomial(Var::z, exponent, CentralScalar(coeff));
}

LaurentPoly wp(int exponent, int coeff = 1) {
  return LaurentPoly::monomial(Var::w, exponent, CentralScalar(coeff));
}

// Brute-force product oracle: expand coefficient-by-coefficient over a range
// of exponents, independent of the map-based implementation.
CentralScalar product_coefficient(const LaurentPoly& f, const LaurentPoly& g,
                                  int exponent) {
  CentralScalar total;
  for (int k = -32; k <= 32; ++k) {
    total += f.coefficient(k) * g.coefficient(exponent - k);
  }
  return total;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  const Rational r = make_rational(6, -4);
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 2);
  CHECK(rational_to_string(r) == "-3/2");
  CHECK(rational_from_string("-3/2") == r);
  CHECK(rational_from_string("7") == Rational(7));
  CHECK_THROWS_AS(make_rational(1, 0), InvalidInput);
  CHECK_THROWS_AS(rational_from_string("x/2"), InvalidInput);
}

TEST_CASE("degree-0 embedding is a ring homomorphism") {
  SplitMix rng(7);
  for (int i = 0; i < 50; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK(CentralScalar(a) + CentralScalar(b) == CentralScalar(a + b));
    CHECK(CentralScalar(a) * CentralScalar(b) == CentralScalar(a * b));
  }
}

TEST_CASE("central scalar arithmetic in the symbol c") {
  const CentralScalar c = CentralScalar::c();
  const CentralScalar s = CentralScalar(make_rational(1, 2)) + c.scaled(Rational(3));
  CHECK(s.coefficient(0) == make_rational(1, 2));
  CHECK(s.coefficient(1) == 3);
  CHECK((c * c) == CentralScalar::c(2));
  CHECK((s - s).is_zero());
  CHECK_FALSE(s.is_rational());
  CHECK(c.scaled(make_rational(1, 2)).to_string() == "1/2*c");
}

TEST_CASE("laurent products: difference of squares and identities") {
  const LaurentPoly f = zp(1) + zp(-1);
  const LaurentPoly g = zp(1) - zp(-1);
  CHECK(f * g == zp(2) - zp(-2));

  const LaurentPoly one = zp(0);
  SplitMix rng(11);
  for (int i = 0; i < 25; ++i) {
    const LaurentPoly h = random_laurent(rng, Var::z, 5, 4, 1);
    CHECK(h * one == h);
  }

  CHECK(zp(2) * zp(-2, 3) == zp(0, 3));
}

TEST_CASE("laurent product matches the direct expansion oracle") {
  SplitMix rng(13);
  for (int i = 0; i < 40; ++i) {
    const LaurentPoly f = random_laurent(rng, Var::z, 6, 4, 1);
    const LaurentPoly g = random_laurent(rng, Var::z, 6, 4, 1);
    const LaurentPoly fg = f * g;
    for (int e = -12; e <= 12; ++e) {
      CHECK(fg.coefficient(e) == product_coefficient(f, g, e));
    }
  }
}

TEST_CASE("mixed variable tags are rejected") {
  CHECK_THROWS_AS(zp(1) + wp(1), InvalidInput);
  CHECK_THROWS_AS(zp(1) * wp(1), InvalidInput);
}

TEST_CASE("divided derivatives") {
  CHECK(derivative(wp(4), 2, true) == wp(2, 6));
  CHECK(derivative(wp(-1), 1, true) == wp(-2, -1));
  CHECK(derivative(wp(2), 3, true).is_zero());
  // Plain derivative is the divided one scaled by j!.
  CHECK(derivative(wp(5), 2) == wp(3, 20));
}

TEST_CASE("derivative is a derivation") {
  SplitMix rng(17);
  for (int i = 0; i < 40; ++i) {
    const LaurentPoly f = random_laurent(rng, Var::z, 5, 3, 1);
    const LaurentPoly g = random_laurent(rng, Var::z, 5, 3, 1);
    CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
  }
}

TEST_CASE("residue") {
  CHECK(residue(zp(2) + zp(-1, 3)) == CentralScalar(3));
  CHECK(residue(zp(5)).is_zero());

  LaurentPoly sum(Var::z);
  for (int n = -4; n <= 4; ++n) {
    sum.add_term(n, CentralScalar(1));
  }
  CHECK(residue(sum) == CentralScalar(1));

  CHECK_THROWS_AS(residue(LaurentPoly(Var::u)), InvalidInput);
}

TEST_CASE("residue of a derivative vanishes") {
  SplitMix rng(19);
  for (int i = 0; i < 60; ++i) {
    const LaurentPoly f = random_laurent(rng, Var::z, 7, 5, 1);
    CHECK(residue(derivative(f)).is_zero());
  }
}

TEST_CASE("gen_binomial values and Pascal's rule") {
  CHECK(gen_binomial(-1, 2) == 1);
  CHECK(gen_binomial(3, 3) == 1);
  CHECK(gen_binomial(2, 4) == 0);
  CHECK(gen_binomial(5, 0) == 1);
  CHECK(gen_binomial(-3, 1) == -3);
  for (int m = -20; m <= 20; ++m) {
    for (int j = 1; j <= 8; ++j) {
      CHECK(gen_binomial(m, j) == gen_binomial(m - 1, j) + gen_binomial(m - 1, j - 1));
    }
  }
}

TEST_CASE("taylor expansion of z^k about w") {
  const auto cubic = taylor_about_w(3, 3);
  REQUIRE(cubic.size() == 4);
  CHECK(cubic[0] == wp(3));
  CHECK(cubic[1] == wp(2, 3));
  CHECK(cubic[2] == wp(1, 3));
  CHECK(cubic[3] == wp(0));

  const auto constant = taylor_about_w(0, 2);
  REQUIRE(constant.size() == 3);
  CHECK(constant[0] == wp(0));
  CHECK(constant[1].is_zero());
  CHECK(constant[2].is_zero());

  // Order-3 coefficient of z^(m+1) is m(m^2-1)/6 * w^(m-2).
  for (int m = -6; m <= 6; ++m) {
    const auto terms = taylor_about_w(m + 1, 3);
    const Rational expected = make_rational(m, 6) * (m - 1) * (m + 1);
    CHECK(terms[3] == LaurentPoly::monomial(Var::w, m - 2, CentralScalar(expected)));
  }
}
