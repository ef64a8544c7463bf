#include "virasoro/delta.hpp"
#include "virasoro/errors.hpp"
#include "virasoro/generate.hpp"

#include <doctest.h>

using namespace virasoro;

namespace {

LaurentPoly wp(int exponent, int coeff = 1) {
  return LaurentPoly::monomial(Var::w, exponent, CentralScalar(coeff));
}

}  // namespace

TEST_CASE("delta derivative coefficients") {
  const Window window(8);
  const BiSeries d0 = delta_derivative(0, window);
  for (int m = -8; m <= 7; ++m) {
    CHECK(d0.coefficient(-m - 1, m) == CentralScalar(1));
  }
  CHECK(d0.coefficient(2, 3).is_zero());

  const BiSeries d1 = delta_derivative(1, window);
  CHECK(d1.coefficient(-3, 1) == CentralScalar(2));

  const BiSeries d2 = delta_derivative(2, window);
  CHECK(d2.coefficient(0, -3) == CentralScalar(1));
}

TEST_CASE("expansion difference produces the delta derivative") {
  const Window window(7);
  for (int j = 0; j <= 4; ++j) {
    const BiSeries zw = expand_izw(j, ExpansionSide::zw, window);
    const BiSeries wz = expand_izw(j, ExpansionSide::wz, window);
    CHECK((zw - wz).equal_on_shared_window(delta_derivative(j, window)));
  }
  // Geometric series region check for j = 0.
  const BiSeries zw0 = expand_izw(0, ExpansionSide::zw, window);
  CHECK(zw0.coefficient(-1, 0) == CentralScalar(1));
  CHECK(zw0.coefficient(-4, 3) == CentralScalar(1));
  CHECK(zw0.coefficient(0, -1).is_zero());
  // For the other region, m = -1 lands at z^0 w^-2 with value 1 when j = 1.
  const BiSeries wz1 = expand_izw(1, ExpansionSide::wz, window);
  CHECK(wz1.coefficient(0, -2) == CentralScalar(1));
}

TEST_CASE("delta identities under multiplication by (z-w)") {
  const Window window(8);
  for (int j = 0; j <= 4; ++j) {
    // (z-w) delta^(j+1) = delta^(j)
    CHECK(delta_derivative(j + 1, window)
              .mul_zw_power(1)
              .equal_on_shared_window(delta_derivative(j, window)));
    // (z-w)^(j+1) delta^(j) = 0
    CHECK(delta_derivative(j, window).mul_zw_power(j + 1).is_zero_on_window());
  }
}

TEST_CASE("delta expansion reindexing under (z-w)^n") {
  DeltaExpansion d;
  d.set_term(1, wp(0));
  DeltaExpansion expected;
  expected.set_term(0, wp(0));
  CHECK(d.mul_zw_power(1) == expected);
  CHECK(d.mul_zw_power(2).is_zero());
  CHECK(d.mul_zw_power(0) == d);

  SplitMix rng(23);
  for (int i = 0; i < 20; ++i) {
    const DeltaExpansion e = random_delta_expansion(rng, 3, 3);
    CHECK(e.mul_zw_power(e.locality_order()).is_zero());
    // Reindexing agrees with the realized series on a common window.
    const Window window(10);
    CHECK(realize(e.mul_zw_power(2), window.shrunk(2))
              .equal_on_shared_window(realize(e, window).mul_zw_power(2)));
  }
}

TEST_CASE("delta is symmetric in its two slots") {
  const Window window(8);
  const BiSeries d0 = delta_derivative(0, window);
  CHECK(d0.swapped().equal_on_shared_window(d0));
}

TEST_CASE("z-derivative of delta equals minus the w-derivative") {
  const Window window(8);
  const BiSeries d0 = delta_derivative(0, window);
  const BiSeries dz = d0.derivative(Var::z);
  const BiSeries dw = d0.derivative(Var::w);
  CHECK(dz.equal_on_shared_window(dw.scaled(CentralScalar(-1))));
  // The divided first derivative is the plain one.
  CHECK(dw.equal_on_shared_window(delta_derivative(1, window)));
}

TEST_CASE("residue substitution z -> w") {
  const Window window(9);
  CHECK(res_z_field(LaurentPoly::monomial(Var::z, 2), window) == wp(2));
  CHECK(res_z_field(LaurentPoly::monomial(Var::z, 0), window) == wp(0));
  CHECK(res_z_field(LaurentPoly::monomial(Var::z, -2, CentralScalar(3)), window) ==
        wp(-2, 3));

  SplitMix rng(29);
  for (int i = 0; i < 25; ++i) {
    const LaurentPoly f = random_laurent(rng, Var::z, 4, 4, 1);
    CHECK(res_z_field(f, window) == f.with_variable(Var::w));
  }

  CHECK_THROWS_AS(res_z_field(LaurentPoly::monomial(Var::z, 5), Window(6)),
                  WindowExhaustion);
}

TEST_CASE("projector fixes delta expansions") {
  const Window window(10);
  DeltaExpansion pure_delta;
  pure_delta.set_term(0, wp(0));
  CHECK(project_pi(realize(pure_delta, window), 3) == pure_delta);

  SplitMix rng(31);
  for (int i = 0; i < 100; ++i) {
    const DeltaExpansion d = random_delta_expansion(rng, 3, 3);
    CHECK(project_pi(realize(d, window), 3) == d);
  }
}

TEST_CASE("projector annihilates series holomorphic in z") {
  const Window window(10);
  const BiSeries mono = BiSeries::monomial(window, 2, 3);
  CHECK(project_pi(mono, 4).is_zero());

  SplitMix rng(37);
  for (int i = 0; i < 50; ++i) {
    CHECK(project_pi(random_holomorphic(rng, window), 4).is_zero());
  }
}

TEST_CASE("projector is idempotent on local series") {
  const Window window(12);
  SplitMix rng(41);
  for (int i = 0; i < 50; ++i) {
    const DeltaExpansion d = random_delta_expansion(rng, 3, 3);
    const BiSeries local = realize(d, window);
    const BiSeries once = realize(project_pi(local, 3), window);
    const BiSeries twice = realize(project_pi(once, 3), window);
    CHECK(once.equal_on_shared_window(twice));
  }
}

TEST_CASE("projector kernel is exactly the z-holomorphic part") {
  const Window window(10);
  SplitMix rng(43);
  for (int i = 0; i < 40; ++i) {
    // local + holomorphic: projection recovers the local summand alone.
    const DeltaExpansion d = random_delta_expansion(rng, 2, 2);
    const BiSeries mixed = realize(d, window) + random_holomorphic(rng, window);
    CHECK(project_pi(mixed, 2) == d);
  }
}

TEST_CASE("projection order is limited by the window") {
  const Window window(4);
  const BiSeries d0 = delta_derivative(0, window);
  CHECK_NOTHROW(project_pi(d0, 3));
  CHECK_THROWS_AS(project_pi(d0, 4), WindowExhaustion);
}

TEST_CASE("realization examples") {
  const Window window(6);
  DeltaExpansion shifted;
  shifted.set_term(1, wp(1));
  const BiSeries series = realize(shifted, window);
  // c^1(w) = w against delta^(1): coefficient of z^(-m-1) w^m is m.
  for (int m = -6; m <= 5; ++m) {
    CHECK(series.coefficient(-m - 1, m) == CentralScalar(Rational(m)));
  }
}

TEST_CASE("coefficient formula matches the realized series") {
  DeltaExpansion pure_delta;
  pure_delta.set_term(0, wp(0));
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) {
      const CentralScalar expected(m + n == -1 ? 1 : 0);
      CHECK(coefficient_formula(pure_delta, m, n) == expected);
    }
  }

  DeltaExpansion first;
  first.set_term(1, wp(0));
  for (int m = -4; m <= 4; ++m) {
    CHECK(coefficient_formula(first, m, -m) == CentralScalar(Rational(m)));
  }

  CHECK(coefficient_formula(DeltaExpansion(), 3, -2).is_zero());

  SplitMix rng(47);
  const Window window(10);
  for (int i = 0; i < 100; ++i) {
    const DeltaExpansion d = random_delta_expansion(rng, 3, 3);
    const BiSeries series = realize(d, window);
    for (int m = -4; m <= 4; ++m) {
      for (int n = -4; n <= 4; ++n) {
        CHECK(coefficient_formula(d, m, n) == series.coefficient(-m - 1, -n - 1));
      }
    }
  }
}

TEST_CASE("locality detection") {
  const Window window(10);
  SplitMix rng(53);
  for (int i = 0; i < 30; ++i) {
    const DeltaExpansion d = random_delta_expansion(rng, 3, 3);
    CHECK(is_local(realize(d, window), 4));
  }

  CHECK_FALSE(is_local(BiSeries::monomial(window, 2, 3), 5));

  DeltaExpansion top;
  top.set_term(3, wp(0));
  CHECK_FALSE(is_local(realize(top, window), 3));
  CHECK(is_local(realize(top, window), 4));

  // The zero distribution is local at every order the window can witness.
  CHECK(is_local(BiSeries(window), 1));
  CHECK(is_local(BiSeries(window), 9));
  CHECK_THROWS_AS(is_local(BiSeries(window), 10), WindowExhaustion);
}

TEST_CASE("taylor recombination reproduces z^k on a window") {
  for (int k = 0; k <= 5; ++k) {
    const Window window(8);
    const auto terms = taylor_about_w(k, k);
    BiSeries sum(window.shrunk(k));
    for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
      BiSeries piece = BiSeries::monomial(window, 0, 0).multiplied_by(terms[i]);
      sum = sum + piece.mul_zw_power(i);
    }
    CHECK(sum.equal_on_shared_window(BiSeries::monomial(window, k, 0)));
  }
}
