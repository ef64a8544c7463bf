#include "virasoro/cohomology.hpp"
#include "virasoro/errors.hpp"
#include "virasoro/generate.hpp"

#include <doctest.h>

using namespace virasoro;

namespace {

Cochain random_cochain(SplitMix& rng, int degree, Window window, int entries = 6) {
  Cochain result(degree, window);
  const auto tuples = ascending_tuples(degree, window);
  for (int i = 0; i < entries && !tuples.empty(); ++i) {
    result.set_value(tuples[static_cast<std::size_t>(rng.below(
                         static_cast<int>(tuples.size())))],
                     random_scalar(rng, 1));
  }
  return result;
}

}  // namespace

TEST_CASE("cochain values are alternating") {
  Cochain omega(2, Window(5));
  omega.set_value({1, 3}, CentralScalar(7));
  CHECK(omega.value({1, 3}) == CentralScalar(7));
  CHECK(omega.value({3, 1}) == CentralScalar(-7));
  CHECK(omega.value({3, 3}) == CentralScalar());
  CHECK_FALSE(omega.value({1, 6}).has_value());  // outside the window

  omega.mark_undefined({2, 4});
  CHECK_FALSE(omega.value({4, 2}).has_value());

  CHECK_THROWS_AS(omega.set_value({3, 1}, CentralScalar(1)), InvalidInput);
  CHECK_THROWS_AS(Cochain(4, Window(3)), UnsupportedDegree);
}

TEST_CASE("multilinear evaluation") {
  Cochain omega(2, Window(4));
  omega.set_value({-1, 1}, CentralScalar(2));
  WittElement x = WittElement::basis(-1, CentralScalar(3));
  WittElement y = WittElement::basis(1) + WittElement::basis(2);
  CHECK(omega.evaluate({x, y}) == CentralScalar(6));
  CHECK(omega.evaluate({y, x}) == CentralScalar(-6));
}

TEST_CASE("coboundary in low degree") {
  const Window window(8);
  // mu supported on L_0 alone.
  Cochain mu(1, window);
  mu.set_value({0}, CentralScalar(1));
  const Cochain d_mu = coboundary(mu);
  for (int m = 1; m <= 8; ++m) {
    // d(mu)(L_m, L_-m) = -2m mu(L_0); the ascending key is (-m, m).
    CHECK(d_mu.value({m, -m}) == CentralScalar(Rational(-2 * m)));
  }
  CHECK(d_mu.value({1, 2}) == CentralScalar());

  // Scalars have zero coboundary.
  Cochain scalar(0, window);
  scalar.set_value({}, CentralScalar(5));
  const Cochain d_scalar = coboundary(scalar);
  for (int n = -8; n <= 8; ++n) {
    CHECK(d_scalar.value({n}) == CentralScalar());
  }

  CHECK_THROWS_AS(coboundary(Cochain(3, window)), UnsupportedDegree);
}

TEST_CASE("window exits are undefined, not zero") {
  const Window window(4);
  SplitMix rng(73);
  const Cochain mu = random_cochain(rng, 1, window);
  const Cochain d_mu = coboundary(mu);
  // (3, 4) brackets to index 7, outside the window.
  CHECK_FALSE(d_mu.value({3, 4}).has_value());
  CHECK(d_mu.undefined_tuples().contains({3, 4}));
}

TEST_CASE("the coboundary squares to zero") {
  const Window window(8);
  SplitMix rng(79);
  for (int i = 0; i < 25; ++i) {
    const Cochain mu = random_cochain(rng, 1, window);
    const Cochain dd = coboundary(coboundary(mu));
    for (const auto& [tuple, value] : dd.values()) {
      CHECK(value.is_zero());
    }
    // Degree 0 -> 2 is zero by construction of the first step.
    const Cochain scalar = random_cochain(rng, 0, window, 1);
    const Cochain dd0 = coboundary(coboundary(scalar));
    CHECK(dd0.values().empty());
  }
}

TEST_CASE("wedge products") {
  const Window window(6);
  Cochain alpha(1, window);
  Cochain beta(1, window);
  SplitMix rng(83);
  for (int n = -6; n <= 6; ++n) {
    alpha.set_value({n}, random_scalar(rng, 0));
    beta.set_value({n}, random_scalar(rng, 0));
  }

  const Cochain wedge_ab = wedge(alpha, beta);
  for (int m = -6; m <= 6; ++m) {
    for (int n = m + 1; n <= 6; ++n) {
      const CentralScalar expected = *alpha.value({m}) * *beta.value({n}) -
                                     *alpha.value({n}) * *beta.value({m});
      CHECK(wedge_ab.value({m, n}) == expected);
    }
  }

  // Graded commutativity in odd degree: alpha ^ alpha = 0.
  const Cochain self = wedge(alpha, alpha);
  for (const auto& [tuple, value] : self.values()) {
    CHECK(value.is_zero());
  }

  // Degree-0 wedge is plain scaling.
  Cochain scalar(0, window);
  scalar.set_value({}, CentralScalar(make_rational(3, 2)));
  const Cochain scaled = wedge(scalar, beta);
  for (int n = -6; n <= 6; ++n) {
    CHECK(scaled.value({n}) == beta.value({n})->scaled(make_rational(3, 2)));
  }

  CHECK_THROWS_AS(wedge(wedge_ab, wedge_ab), UnsupportedDegree);
}

TEST_CASE("leibniz rule for the coboundary over wedges") {
  const Window window(6);
  SplitMix rng(89);
  // p = q = 1.
  for (int i = 0; i < 10; ++i) {
    const Cochain eta = random_cochain(rng, 1, window, 8);
    const Cochain theta = random_cochain(rng, 1, window, 8);
    const Cochain lhs = coboundary(wedge(eta, theta));
    const Cochain rhs =
        wedge(coboundary(eta), theta) - wedge(eta, coboundary(theta));
    CHECK(lhs.equal_on_defined(rhs));
  }
  // p = 0, q = 1 and q = 2.
  for (int i = 0; i < 10; ++i) {
    const Cochain scalar = random_cochain(rng, 0, window, 1);
    for (int q = 1; q <= 2; ++q) {
      const Cochain theta = random_cochain(rng, q, window, 8);
      const Cochain lhs = coboundary(wedge(scalar, theta));
      const Cochain rhs = wedge(scalar, coboundary(theta));
      CHECK(lhs.equal_on_defined(rhs));
    }
  }
}

TEST_CASE("every coboundary is a cocycle") {
  const Window window(7);
  SplitMix rng(97);
  for (int i = 0; i < 20; ++i) {
    const Cochain mu = random_cochain(rng, 1, window, 8);
    const CocycleCheck check = is_cocycle(coboundary(mu));
    CHECK(check.holds);
    CHECK(check.checked > 0);
  }
}

TEST_CASE("the normalized diagonal form is a cocycle, quintic is not") {
  CHECK(is_cocycle(diagonal_to_cochain(DiagonalCocycle::virasoro(8))).holds);

  const DiagonalCocycle quintic = DiagonalCocycle::from_formula(8, [](int m) {
    return CentralScalar(Rational(BigInt(m) * m * m * m * m));
  });
  const CocycleCheck check = is_cocycle(diagonal_to_cochain(quintic));
  CHECK_FALSE(check.holds);
  REQUIRE(check.counterexample.has_value());
  // (-3, 1, 2) violates the cyclic identity: -f(3) - 5 f(1) + 4 f(2) != 0.
  CHECK(*check.counterexample == std::array<int, 3>{-3, 1, 2});
}

TEST_CASE("coboundary witnesses") {
  // f(m) = m is a coboundary with mu(L_0) = -1/2.
  const DiagonalCocycle linear =
      DiagonalCocycle::from_formula(6, [](int m) { return CentralScalar(Rational(m)); });
  const auto witness = is_coboundary(diagonal_to_cochain(linear));
  REQUIRE(witness.has_value());
  CHECK(witness->value({0}) == CentralScalar(make_rational(-1, 2)));
  CHECK(coboundary(*witness).equal_on_defined(diagonal_to_cochain(linear)));

  // f(m) = m^3 is not a coboundary.
  const DiagonalCocycle cubic = DiagonalCocycle::from_formula(6, [](int m) {
    return CentralScalar(Rational(BigInt(m) * m * m));
  });
  CHECK_FALSE(is_coboundary(diagonal_to_cochain(cubic)).has_value());

  // Nor is the normalized representative.
  CHECK_FALSE(is_coboundary(diagonal_to_cochain(DiagonalCocycle::virasoro(6))).has_value());

  // The zero cochain has the zero witness.
  const auto zero_witness = is_coboundary(Cochain(2, Window(5)));
  REQUIRE(zero_witness.has_value());
  for (int n = -5; n <= 5; ++n) {
    CHECK(zero_witness->value({n}) == CentralScalar());
  }

  // Non-cocycle input is rejected.
  const DiagonalCocycle quintic = DiagonalCocycle::from_formula(6, [](int m) {
    return CentralScalar(Rational(BigInt(m) * m * m * m * m));
  });
  CHECK_THROWS_AS(is_coboundary(diagonal_to_cochain(quintic)), InvalidInput);
}

TEST_CASE("diagonal cocycle solve finds a one-dimensional quotient") {
  for (int window = 4; window <= 12; ++window) {
    const CocycleSolveReport report = diagonal_cocycle_solve(window);
    CHECK(report.solution_dimension == 2);
    CHECK(report.coboundary_dimension == 1);
    CHECK(report.quotient_dimension == 1);
    for (int m = 1; m <= window; ++m) {
      const Rational expected = make_rational(BigInt(m) * (m - 1) * (m + 1), 12);
      const auto it = report.normalized_representative.find(m);
      const Rational got = it == report.normalized_representative.end() ? Rational(0)
                                                                        : it->second;
      CHECK(got == expected);
    }
  }
  CHECK_THROWS_AS(diagonal_cocycle_solve(3), UnderDeterminedWindow);
}

TEST_CASE("the solution space is spanned by the linear and cubic forms") {
  const CocycleSolveReport report = diagonal_cocycle_solve(10);
  REQUIRE(report.solution_dimension == 2);
  // Both candidate forms satisfy every constraint; with dimension two they
  // span the space.
  for (int window = 4; window <= 10; ++window) {
    for (int m = -window; m <= window; ++m) {
      for (int n = m + 1; n <= window; ++n) {
        if (std::abs(m + n) > window) {
          continue;
        }
        auto linear = [](int k) { return Rational(k); };
        auto cubic = [](int k) { return Rational(BigInt(k) * k * k); };
        for (auto& f : {std::function<Rational(int)>(linear),
                        std::function<Rational(int)>(cubic)}) {
          const Rational value = Rational(m - n) * f(m + n) -
                                 Rational(m + 2 * n) * f(m) +
                                 Rational(2 * m + n) * f(n);
          CHECK(value == 0);
        }
      }
    }
  }
}

TEST_CASE("central extensions from cocycles") {
  const Window window(8);
  const ExtensionReport report =
      build_central_extension(DiagonalCocycle::virasoro(8), window);
  CHECK(report.jacobi.holds);
  const VirasoroElement cell = report.table.at({2, -2});
  CHECK(cell.witt() == WittElement::basis(0, CentralScalar(4)));
  CHECK(cell.central() == CentralScalar::c().scaled(make_rational(1, 2)));

  // The zero form gives the split extension.
  const ExtensionReport split = build_central_extension(DiagonalCocycle(8), window);
  CHECK(split.jacobi.holds);
  for (const auto& [key, value] : split.table) {
    CHECK(value.central().is_zero());
    CHECK(value.witt() ==
          WittElement::basis(key.first + key.second,
                             CentralScalar(Rational(key.first - key.second))));
  }

  // Non-cocycle input is rejected with the failing triple.
  const DiagonalCocycle quintic = DiagonalCocycle::from_formula(8, [](int m) {
    return CentralScalar(Rational(BigInt(m) * m * m * m * m));
  });
  CHECK_THROWS_WITH_AS(build_central_extension(quintic, window),
                       "not a cocycle; counterexample (-3, 1, 2)", InvalidInput);
}

TEST_CASE("changing the cocycle by a coboundary shifts the basis") {
  const Window window(6);
  SplitMix rng(101);
  const Cochain omega = diagonal_to_cochain(DiagonalCocycle::virasoro(6));
  Cochain mu(1, window);
  for (int n = -6; n <= 6; ++n) {
    mu.set_value({n}, random_scalar(rng, 0));
  }
  const Cochain shifted = omega + coboundary(mu);

  const ExtensionReport before = build_central_extension(omega, window);
  const ExtensionReport after = build_central_extension(shifted, window);
  CHECK(after.jacobi.holds);

  // [L_m, L_n] gains (omega' - omega)(m, n) = d(mu)(m, n) on the center,
  // exactly the change of section L_k -> L_k + mu(L_k) c.
  for (const auto& [key, cell] : after.table) {
    const auto base = before.table.find(key);
    if (base == before.table.end()) {
      continue;
    }
    const auto delta = coboundary(mu).value({key.first, key.second});
    if (!delta.has_value()) {
      continue;
    }
    CHECK(cell.witt() == base->second.witt());
    CHECK(cell.central() - base->second.central() == *delta * CentralScalar::c());
  }
}
