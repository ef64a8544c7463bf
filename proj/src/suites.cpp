#include "virasoro/suites.hpp"

#include "virasoro/cohomology.hpp"
#include "virasoro/delta.hpp"
#include "virasoro/errors.hpp"
#include "virasoro/exchange.hpp"
#include "virasoro/generate.hpp"
#include "virasoro/json_io.hpp"
#include "virasoro/ope.hpp"
#include "virasoro/words.hpp"

#include <chrono>
#include <fstream>
#include <functional>

namespace virasoro {

namespace {

// A check body returns nullopt on success or a counterexample on failure;
// window exhaustion escapes as the corresponding status.
using CheckBody = std::function<std::optional<Json>()>;

void run_check(SuiteResult& suite, const std::string& name, const CheckBody& body) {
  CheckResult check;
  check.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto counterexample = body();
    if (counterexample.has_value()) {
      check.status = CheckStatus::fail;
      check.counterexample = *counterexample;
    }
  } catch (const WindowExhaustion&) {
    check.status = CheckStatus::window_exhausted;
  } catch (const UnderDeterminedWindow&) {
    check.status = CheckStatus::window_exhausted;
  }
  const auto stop = std::chrono::steady_clock::now();
  check.millis =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
          .count();
  suite.checks.push_back(std::move(check));
}

Json triple_json(const std::array<int, 3>& triple) {
  return Json::array({triple[0], triple[1], triple[2]});
}

std::uint64_t suite_seed(const RunConfig& config, std::uint64_t salt) {
  SplitMix mix(config.seed + 0x1000 * salt);
  return mix.next();
}

// ---------------------------------------------------------------------------
// delta-identity: the distribution calculus identities at the window.

SuiteResult suite_delta_identity(const RunConfig& config) {
  SuiteResult suite{"delta-identity", {}};
  const Window window(config.window);

  run_check(suite, "substitution", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 1));
    const int reach = config.window / 2;
    for (int i = 0; i < 25; ++i) {
      const LaurentPoly f = random_laurent(rng, Var::z, reach, 4, 1);
      if (res_z_field(f, window) != f.with_variable(Var::w)) {
        return to_json(f);
      }
    }
    return std::nullopt;
  });

  run_check(suite, "slot-symmetry", [&]() -> std::optional<Json> {
    const BiSeries d0 = delta_derivative(0, window);
    if (!d0.swapped().equal_on_shared_window(d0)) {
      return Json("delta is not symmetric under slot exchange");
    }
    return std::nullopt;
  });

  run_check(suite, "derivative-antisymmetry", [&]() -> std::optional<Json> {
    const BiSeries d0 = delta_derivative(0, window);
    if (!d0.derivative(Var::z).equal_on_shared_window(
            d0.derivative(Var::w).scaled(CentralScalar(-1)))) {
      return Json("z- and w-derivatives of delta do not cancel");
    }
    return std::nullopt;
  });

  run_check(suite, "pole-cancellation", [&]() -> std::optional<Json> {
    for (int j = 0; j <= 4; ++j) {
      if (!delta_derivative(j + 1, window)
               .mul_zw_power(1)
               .equal_on_shared_window(delta_derivative(j, window))) {
        return Json(j);
      }
    }
    return std::nullopt;
  });

  run_check(suite, "nilpotence", [&]() -> std::optional<Json> {
    for (int j = 0; j <= 4; ++j) {
      if (!delta_derivative(j, window).mul_zw_power(j + 1).is_zero_on_window()) {
        return Json(j);
      }
    }
    return std::nullopt;
  });

  run_check(suite, "expansion-difference", [&]() -> std::optional<Json> {
    for (int j = 0; j <= 4; ++j) {
      const BiSeries zw = expand_izw(j, ExpansionSide::zw, window);
      const BiSeries wz = expand_izw(j, ExpansionSide::wz, window);
      if (!(zw - wz).equal_on_shared_window(delta_derivative(j, window))) {
        return Json(j);
      }
    }
    return std::nullopt;
  });

  return suite;
}

// ---------------------------------------------------------------------------
// projector: the decomposition into delta part and z-holomorphic part.

SuiteResult suite_projector(const RunConfig& config) {
  SuiteResult suite{"projector", {}};
  const Window window(config.window);
  const int max_j = 3;

  run_check(suite, "round-trip", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 2));
    for (int i = 0; i < 100; ++i) {
      const DeltaExpansion d = random_delta_expansion(rng, max_j, 3);
      if (project_pi(realize(d, window), max_j) != d) {
        return to_json(d);
      }
    }
    return std::nullopt;
  });

  run_check(suite, "idempotent", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 3));
    for (int i = 0; i < 100; ++i) {
      const BiSeries local = realize(random_delta_expansion(rng, max_j, 3), window);
      const BiSeries once = realize(project_pi(local, max_j), window);
      const BiSeries twice = realize(project_pi(once, max_j), window);
      if (!once.equal_on_shared_window(twice)) {
        return Json("projection is not idempotent");
      }
    }
    return std::nullopt;
  });

  run_check(suite, "kernel", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 4));
    for (int i = 0; i < 100; ++i) {
      const DeltaExpansion d = random_delta_expansion(rng, 2, 2);
      const BiSeries mixed = realize(d, window) + random_holomorphic(rng, window);
      const DeltaExpansion projected = project_pi(mixed, 2);
      if (projected != d || projected.is_zero() != d.is_zero()) {
        return to_json(d);
      }
    }
    return std::nullopt;
  });

  run_check(suite, "coefficient-formula", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 5));
    const int reach = config.window / 2;
    for (int i = 0; i < 100; ++i) {
      const DeltaExpansion d = random_delta_expansion(rng, max_j, 3);
      const BiSeries series = realize(d, window);
      for (int m = -reach; m <= reach; ++m) {
        for (int n = -reach; n <= reach; ++n) {
          if (coefficient_formula(d, m, n) != series.coefficient(-m - 1, -n - 1)) {
            Json out;
            out["expansion"] = to_json(d);
            out["m"] = m;
            out["n"] = n;
            return out;
          }
        }
      }
    }
    return std::nullopt;
  });

  run_check(suite, "locality-order", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 6));
    for (int i = 0; i < 50; ++i) {
      const DeltaExpansion d = random_delta_expansion(rng, max_j, 3);
      const BiSeries series = realize(d, window);
      if (d.is_zero()) {
        if (!is_local(series, 1)) {
          return to_json(d);
        }
        continue;
      }
      const int order = d.locality_order();
      if (!is_local(series, order)) {
        return to_json(d);
      }
      // One power less must leave the top term visible.
      if (order >= 2 && is_local(series, order - 1)) {
        return to_json(d);
      }
    }
    return std::nullopt;
  });

  return suite;
}

// ---------------------------------------------------------------------------
// normal-ordering: rearrangement identities in the free word algebra.

SuiteResult suite_normal_ordering(const RunConfig& config) {
  SuiteResult suite{"normal-ordering", {}};
  const int top = std::min(config.window, 8);

  run_check(suite, "rearrangement", [&]() -> std::optional<Json> {
    for (int bound = 2; bound <= top; ++bound) {
      if (!verify_normal_order_identity("a", "b", Window(bound))) {
        return Json(bound);
      }
    }
    return std::nullopt;
  });

  run_check(suite, "same-symbol", [&]() -> std::optional<Json> {
    if (!verify_normal_order_identity("a", "a", Window(top))) {
      return Json("identity fails for a single symbol");
    }
    return std::nullopt;
  });

  run_check(suite, "split-partition", [&]() -> std::optional<Json> {
    const Window window(top);
    const WordSeries whole = whole_field("a", window);
    const auto [negative, positive] = split_field(whole);
    if (!(negative + positive == whole)) {
      return Json("halves do not sum back");
    }
    return std::nullopt;
  });

  run_check(suite, "split-derivative", [&]() -> std::optional<Json> {
    const Window window(top);
    const WordSeries whole = whole_field("a", window);
    const auto [negative, positive] = split_field(whole);
    const auto [d_neg, d_pos] = split_field(series_derivative(whole));
    if (!(d_neg == series_derivative(negative)) ||
        !(d_pos == series_derivative(positive))) {
      return Json("derivative does not commute with splitting");
    }
    return std::nullopt;
  });

  return suite;
}

// ---------------------------------------------------------------------------
// lie-jacobi: bracket axioms on mode windows.

SuiteResult suite_lie_jacobi(const RunConfig& config) {
  SuiteResult suite{"lie-jacobi", {}};
  const Window window(config.window);

  run_check(suite, "witt-jacobi", [&]() -> std::optional<Json> {
    const JacobiResult result = jacobi_check(witt_basis_bracket(window), window);
    if (!result.holds) {
      return triple_json(*result.counterexample);
    }
    return std::nullopt;
  });

  run_check(suite, "virasoro-jacobi", [&]() -> std::optional<Json> {
    const JacobiResult result = jacobi_check(
        virasoro_basis_bracket(window, DiagonalCocycle::virasoro(config.window)),
        window);
    if (!result.holds) {
      return triple_json(*result.counterexample);
    }
    return std::nullopt;
  });

  run_check(suite, "mode-vf-iso", [&]() -> std::optional<Json> {
    if (!mode_vf_iso_check(window)) {
      return Json("structure constants differ between pictures");
    }
    return std::nullopt;
  });

  run_check(suite, "alternating", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 7));
    for (int i = 0; i < 40; ++i) {
      const VectorField a(random_laurent(rng, Var::z, 5, 3, 0));
      const VectorField b(random_laurent(rng, Var::z, 5, 3, 0));
      if (!vf_bracket(a, a).is_zero() ||
          !(vf_bracket(a, b) + vf_bracket(b, a)).is_zero()) {
        return to_json(a.coefficient());
      }
    }
    return std::nullopt;
  });

  run_check(suite, "centrality", [&]() -> std::optional<Json> {
    const DiagonalCocycle omega = DiagonalCocycle::virasoro(config.window);
    const VirasoroElement center = VirasoroElement::center(CentralScalar(3));
    for (int n = -config.window; n <= config.window; ++n) {
      if (!virasoro_bracket(VirasoroElement::basis(n), center, omega).is_zero() ||
          !virasoro_bracket(center, VirasoroElement::basis(n), omega).is_zero()) {
        return Json(n);
      }
    }
    return std::nullopt;
  });

  return suite;
}

// ---------------------------------------------------------------------------
// coboundary: the complex, the wedge, and second-degree solves.

SuiteResult suite_coboundary(const RunConfig& config) {
  SuiteResult suite{"coboundary", {}};
  const Window window(config.window);

  auto random_cochain = [&](SplitMix& rng, int degree, int entries) {
    Cochain result(degree, window);
    const auto tuples = ascending_tuples(degree, window);
    for (int i = 0; i < entries && !tuples.empty(); ++i) {
      result.set_value(
          tuples[static_cast<std::size_t>(rng.below(static_cast<int>(tuples.size())))],
          random_scalar(rng, 1));
    }
    return result;
  };

  run_check(suite, "dd-zero", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 8));
    for (int i = 0; i < 50; ++i) {
      const Cochain mu = random_cochain(rng, 1, 8);
      for (const auto& [tuple, value] : coboundary(coboundary(mu)).values()) {
        if (!value.is_zero()) {
          return Json::array({tuple[0], tuple[1], tuple[2]});
        }
      }
      const Cochain scalar = random_cochain(rng, 0, 1);
      if (!coboundary(coboundary(scalar)).values().empty()) {
        return Json("scalar coboundary squared is nonzero");
      }
    }
    return std::nullopt;
  });

  run_check(suite, "leibniz", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 9));
    for (int i = 0; i < 10; ++i) {
      const Cochain eta = random_cochain(rng, 1, 8);
      const Cochain theta = random_cochain(rng, 1, 8);
      if (!coboundary(wedge(eta, theta))
               .equal_on_defined(wedge(coboundary(eta), theta) -
                                 wedge(eta, coboundary(theta)))) {
        return Json("degree (1,1)");
      }
      const Cochain scalar = random_cochain(rng, 0, 1);
      for (int q = 1; q <= 2; ++q) {
        const Cochain body = random_cochain(rng, q, 8);
        if (!coboundary(wedge(scalar, body))
                 .equal_on_defined(wedge(scalar, coboundary(body)))) {
          return Json("degree (0," + std::to_string(q) + ")");
        }
      }
    }
    return std::nullopt;
  });

  run_check(suite, "coboundaries-are-cocycles", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 10));
    for (int i = 0; i < 25; ++i) {
      const CocycleCheck check = is_cocycle(coboundary(random_cochain(rng, 1, 8)));
      if (!check.holds) {
        return triple_json(*check.counterexample);
      }
    }
    return std::nullopt;
  });

  run_check(suite, "linear-witness", [&]() -> std::optional<Json> {
    const DiagonalCocycle linear = DiagonalCocycle::from_formula(
        config.window, [](int m) { return CentralScalar(Rational(m)); });
    const auto witness = is_coboundary(diagonal_to_cochain(linear));
    if (!witness.has_value()) {
      return Json("no witness for the linear diagonal form");
    }
    if (witness->value({0}) != CentralScalar(make_rational(-1, 2))) {
      return Json("witness has the wrong value on L_0");
    }
    return std::nullopt;
  });

  run_check(suite, "cubic-no-witness", [&]() -> std::optional<Json> {
    const DiagonalCocycle cubic = DiagonalCocycle::from_formula(
        config.window,
        [](int m) { return CentralScalar(Rational(BigInt(m) * m * m)); });
    if (is_coboundary(diagonal_to_cochain(cubic)).has_value()) {
      return Json("cubic diagonal form must not be a coboundary");
    }
    return std::nullopt;
  });

  run_check(suite, "h2-quotient", [&]() -> std::optional<Json> {
    const CocycleSolveReport report = diagonal_cocycle_solve(config.window);
    if (report.quotient_dimension != 1 || report.solution_dimension != 2) {
      return to_json(report);
    }
    return std::nullopt;
  });

  return suite;
}

// ---------------------------------------------------------------------------
// cross-oracle: agreement between the independent bracket routes.

SuiteResult suite_cross_oracle(const RunConfig& config) {
  SuiteResult suite{"cross-oracle", {}};
  const int reach = std::min(config.window, 8);
  const Window window(reach);
  const OpeData tt = OpeData::tt();

  run_check(suite, "mode-vs-residue", [&]() -> std::optional<Json> {
    for (int m = -reach; m <= reach; ++m) {
      for (int n = -reach; n <= reach; ++n) {
        if (mode_bracket_from_ope(tt, m, n) != residue_pairing_bracket(tt, m, n)) {
          return Json::array({m, n});
        }
      }
    }
    return std::nullopt;
  });

  run_check(suite, "antisymmetry", [&]() -> std::optional<Json> {
    for (int m = -reach; m <= reach; ++m) {
      for (int n = -reach; n <= reach; ++n) {
        if (!(residue_pairing_bracket(tt, m, n) + residue_pairing_bracket(tt, n, m))
                 .is_zero()) {
          return Json::array({m, n});
        }
      }
    }
    return std::nullopt;
  });

  run_check(suite, "extension-table", [&]() -> std::optional<Json> {
    const ExtensionReport extension =
        build_central_extension(DiagonalCocycle::virasoro(reach), window);
    if (!extension.jacobi.holds) {
      return triple_json(*extension.jacobi.counterexample);
    }
    for (const auto& [key, cell] : extension.table) {
      if (cell != to_virasoro(residue_pairing_bracket(tt, key.first, key.second))) {
        return Json::array({key.first, key.second});
      }
    }
    return std::nullopt;
  });

  run_check(suite, "basis-change", [&]() -> std::optional<Json> {
    SplitMix rng(suite_seed(config, 11));
    const Cochain omega = diagonal_to_cochain(DiagonalCocycle::virasoro(reach));
    Cochain mu(1, window);
    for (int n = -reach; n <= reach; ++n) {
      mu.set_value({n}, random_scalar(rng, 0));
    }
    const Cochain d_mu = coboundary(mu);
    const ExtensionReport before = build_central_extension(omega, window);
    const ExtensionReport after = build_central_extension(omega + d_mu, window);
    if (!after.jacobi.holds) {
      return triple_json(*after.jacobi.counterexample);
    }
    for (const auto& [key, cell] : after.table) {
      const auto base = before.table.find(key);
      const auto delta = d_mu.value({key.first, key.second});
      if (base == before.table.end() || !delta.has_value()) {
        continue;
      }
      if (cell.witt() != base->second.witt() ||
          cell.central() - base->second.central() != *delta * CentralScalar::c()) {
        return Json::array({key.first, key.second});
      }
    }
    return std::nullopt;
  });

  run_check(suite, "t-identification", [&]() -> std::optional<Json> {
    if (!verify_t_identification(tt)) {
      return Json("canonical data fails the defining relations");
    }
    const FieldPolynomial t = FieldPolynomial::of(energy_momentum());
    if (verify_t_identification(OpeData::tt_with_c1(t.scaled(CentralScalar(2))))) {
      return Json("doubled coefficient passes unexpectedly");
    }
    if (verify_t_identification(
            OpeData::tt_with_c1(t + FieldPolynomial::constant(CentralScalar(1))))) {
      return Json("constant offset passes unexpectedly");
    }
    return std::nullopt;
  });

  return suite;
}

// ---------------------------------------------------------------------------
// corrupted-cocycle: a deliberately broken fixture exercising the failure
// path end to end. Not part of the default selection.

SuiteResult suite_corrupted_cocycle(const RunConfig& config) {
  SuiteResult suite{"corrupted-cocycle", {}};
  const int bound = config.window;

  run_check(suite, "quintic-diagonal", [&]() -> std::optional<Json> {
    const DiagonalCocycle quintic = DiagonalCocycle::from_formula(bound, [](int m) {
      return CentralScalar(Rational(BigInt(m) * m * m * m * m));
    });
    const CocycleCheck check = is_cocycle(diagonal_to_cochain(quintic));
    if (!check.holds) {
      return triple_json(*check.counterexample);
    }
    return std::nullopt;
  });

  return suite;
}

struct SuiteEntry {
  std::string name;
  int min_window;
  SuiteResult (*run)(const RunConfig&);
  bool in_default;
};

const SuiteEntry kSuites[] = {
    {"delta-identity", 6, suite_delta_identity, true},
    {"projector", 6, suite_projector, true},
    {"normal-ordering", 2, suite_normal_ordering, true},
    {"lie-jacobi", 2, suite_lie_jacobi, true},
    {"coboundary", 4, suite_coboundary, true},
    {"cross-oracle", 4, suite_cross_oracle, true},
    {"corrupted-cocycle", 4, suite_corrupted_cocycle, false},
};

}  // namespace

std::vector<std::string> available_suites() {
  std::vector<std::string> names;
  for (const auto& entry : kSuites) {
    names.push_back(entry.name);
  }
  return names;
}

std::vector<std::string> default_suites() {
  std::vector<std::string> names;
  for (const auto& entry : kSuites) {
    if (entry.in_default) {
      names.push_back(entry.name);
    }
  }
  return names;
}

bool suite_exists(const std::string& name) {
  for (const auto& entry : kSuites) {
    if (entry.name == name) {
      return true;
    }
  }
  return false;
}

SuiteResult run_suite(const std::string& name, const RunConfig& config) {
  for (const auto& entry : kSuites) {
    if (entry.name != name) {
      continue;
    }
    if (config.window < entry.min_window) {
      SuiteResult result{entry.name, {}};
      CheckResult note;
      note.name = "window-requirement";
      note.status = CheckStatus::window_exhausted;
      result.checks.push_back(note);
      return result;
    }
    return entry.run(config);
  }
  throw InvalidInput("unknown suite: " + name);
}

Report cmd_verify(const RunConfig& config) {
  Report report;
  report.command = "verify";
  report.config = config;
  if (report.config.suites.empty()) {
    report.config.suites = default_suites();
  }
  for (const auto& name : report.config.suites) {
    report.suites.push_back(run_suite(name, report.config));
  }
  return report;
}

LaurentPoly parse_w_polynomial(const std::string& text) {
  LaurentPoly result = LaurentPoly::monomial(Var::w, 0);
  std::size_t begin = 0;
  bool any = false;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find('*', begin), text.size());
    std::string factor = text.substr(begin, end - begin);
    if (factor.empty()) {
      throw InvalidInput("empty factor in: " + text);
    }
    any = true;
    CentralScalar scale(1);
    int exponent = 0;
    if (factor[0] == 'c' || factor[0] == 'w') {
      const char head = factor[0];
      int power = 1;
      std::string rest = factor.substr(1);
      if (!rest.empty() && rest[0] == '^') {
        power = std::stoi(rest.substr(1));
        rest.clear();
      } else if (!rest.empty() && rest[0] == '/' && head == 'c') {
        // "c/2" style shorthand
        scale = scale.scaled(Rational(1) / rational_from_string(rest.substr(1)));
        rest.clear();
      }
      if (!rest.empty()) {
        throw InvalidInput("malformed factor: " + factor);
      }
      if (head == 'c') {
        scale = scale * CentralScalar::c(power);
      } else {
        exponent = power;
      }
    } else {
      scale = scale.scaled(rational_from_string(factor));
    }
    result = result * LaurentPoly::monomial(Var::w, exponent, scale);
    if (end == text.size()) {
      break;
    }
    begin = end + 1;
  }
  if (!any) {
    throw InvalidInput("empty polynomial expression");
  }
  return result;
}

Report cmd_ope_derive_tt(const RunConfig& config, const OpeDeriveOptions& options) {
  Report report;
  report.command = "ope derive-tt";
  report.config = config;
  SuiteResult suite{"derive-tt", {}};
  Json extra;

  if (options.check_only) {
    OpeData ope = OpeData::tt();
    if (options.ope_path.has_value()) {
      std::ifstream in(*options.ope_path);
      if (!in) {
        throw InvalidInput("cannot read " + *options.ope_path);
      }
      Json parsed = Json::parse(in);
      ope = ope_from_json(parsed);
    }
    extra["ope"] = ope.display();
    run_check(suite, "weight-bound", [&]() -> std::optional<Json> {
      if (!weight_bound_check(ope)) {
        return Json("top coefficient breaks the weight bound");
      }
      return std::nullopt;
    });
    run_check(suite, "t-identification", [&]() -> std::optional<Json> {
      if (!verify_t_identification(ope)) {
        return Json("defining relations fail on the given data");
      }
      return std::nullopt;
    });
    run_check(suite, "mode-vs-residue", [&]() -> std::optional<Json> {
      const int reach = std::min(config.window, 6);
      for (int m = -reach; m <= reach; ++m) {
        for (int n = -reach; n <= reach; ++n) {
          if (mode_bracket_from_ope(ope, m, n) != residue_pairing_bracket(ope, m, n)) {
            return Json::array({m, n});
          }
        }
      }
      return std::nullopt;
    });
    report.suites.push_back(std::move(suite));
    report.extra = std::move(extra);
    return report;
  }

  if (options.monomial_top.has_value() || options.order != 4) {
    const int order = options.order;
    if (order < 1) {
      throw InvalidInput("order must be positive");
    }
    const LaurentPoly top = options.monomial_top.has_value()
                                ? parse_w_polynomial(*options.monomial_top)
                                : LaurentPoly::monomial(
                                      Var::w, 0,
                                      CentralScalar::c().scaled(make_rational(1, 2)));
    std::map<int, LaurentPoly> fixed;
    fixed.emplace(order - 1, top);
    const ExchangeReport exchange =
        solve_exchange_constraints(order, fixed, config.window);
    extra["constraints"] = exchange.summary();
    extra["report"] = to_json(exchange);
    run_check(suite, "constraint-system-consistent", [&]() -> std::optional<Json> {
      if (!exchange.unknown_system_consistent()) {
        return Json("elimination over the unknowns hit a contradiction");
      }
      return std::nullopt;
    });
    report.suites.push_back(std::move(suite));
    report.extra = std::move(extra);
    return report;
  }

  // The canonical derivation: fix the top to c/2, solve, then pin the free
  // coefficient through the defining relations.
  std::map<int, LaurentPoly> fixed;
  fixed.emplace(3, LaurentPoly::monomial(
                       Var::w, 0, CentralScalar::c().scaled(make_rational(1, 2))));
  const ExchangeReport exchange = solve_exchange_constraints(4, fixed, config.window);
  extra["constraints"] = exchange.summary();
  extra["report"] = to_json(exchange);

  run_check(suite, "derived-relations", [&]() -> std::optional<Json> {
    if (!exchange.satisfiable()) {
      return Json("exchange constraints unsatisfiable");
    }
    if (!exchange.slot_is_zero(2)) {
      return Json("c2 does not vanish");
    }
    if (!exchange.slot_is_free(1)) {
      return Json("c1 is not free");
    }
    if (exchange.proportional_derivative(0, 1, 1) != make_rational(1, 2)) {
      return Json("c0 is not half the derivative of c1");
    }
    return std::nullopt;
  });

  run_check(suite, "t-identification", [&]() -> std::optional<Json> {
    if (!verify_t_identification(OpeData::tt())) {
      return Json("canonical assignment fails the defining relations");
    }
    return std::nullopt;
  });

  extra["ope"] = OpeData::tt().display();
  report.suites.push_back(std::move(suite));
  report.extra = std::move(extra);
  return report;
}

Report cmd_cocycle_solve(const RunConfig& config, std::optional<int> sweep_to) {
  Report report;
  report.command = "cocycle solve";
  report.config = config;
  const int last = sweep_to.value_or(config.window);
  if (last < config.window) {
    throw InvalidInput("sweep bound below the window");
  }
  SuiteResult suite{"cocycle-solve", {}};
  Json reports = Json::array();
  for (int window = config.window; window <= last; ++window) {
    const CocycleSolveReport solved = diagonal_cocycle_solve(window);
    reports.push_back(to_json(solved));
    run_check(suite, "quotient-dimension@" + std::to_string(window),
              [&]() -> std::optional<Json> {
                if (solved.solution_dimension != 2 || solved.coboundary_dimension != 1 ||
                    solved.quotient_dimension != 1) {
                  return to_json(solved);
                }
                return std::nullopt;
              });
    run_check(suite, "normalized-representative@" + std::to_string(window),
              [&]() -> std::optional<Json> {
                for (int m = 1; m <= window; ++m) {
                  const Rational expected =
                      make_rational(BigInt(m) * (m - 1) * (m + 1), 12);
                  const auto it = solved.normalized_representative.find(m);
                  const Rational got = it == solved.normalized_representative.end()
                                           ? Rational(0)
                                           : it->second;
                  if (got != expected) {
                    return to_json(solved);
                  }
                }
                return std::nullopt;
              });
  }
  report.suites.push_back(std::move(suite));
  report.extra["reports"] = std::move(reports);
  return report;
}

Report cmd_bracket(int m, int n, const RunConfig& config) {
  const int bound = config.window;
  if (std::abs(m) > bound || std::abs(n) > bound || std::abs(m + n) > bound) {
    throw InvalidInput("bracket indices must stay within the window");
  }
  Report report;
  report.command = "bracket";
  report.config = config;

  const WittElement plain = witt_bracket(WittElement::basis(m), WittElement::basis(n));
  const VirasoroElement extended =
      virasoro_bracket(VirasoroElement::basis(m), VirasoroElement::basis(n),
                       DiagonalCocycle::virasoro(bound));
  const VirasoroElement paired =
      to_virasoro(residue_pairing_bracket(OpeData::tt(), m, n));

  SuiteResult suite{"bracket", {}};
  run_check(suite, "route-agreement", [&]() -> std::optional<Json> {
    if (extended != paired || plain != extended.witt()) {
      Json out;
      out["witt"] = to_json(VirasoroElement(plain, CentralScalar()));
      out["virasoro"] = to_json(extended);
      out["residue_pairing"] = to_json(paired);
      return out;
    }
    return std::nullopt;
  });
  report.suites.push_back(std::move(suite));

  report.extra["witt"] = plain.to_string();
  report.extra["virasoro"] = extended.to_string();
  report.extra["residue_pairing"] = paired.to_string();
  report.extra["element"] = to_json(extended);
  return report;
}

}  // namespace virasoro
