#include "virasoro/cli.hpp"

#include "virasoro/errors.hpp"
#include "virasoro/suites.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

namespace virasoro {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWindowExhausted = 3;

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "Exact kernel for formal distribution calculus, operator product\n"
      "expansions, and the second cohomology of the mode algebra of\n"
      "Laurent vector fields."};
  app.name("virasoro");

  RunConfig config;
  std::string format = "text";
  app.add_option("--window", config.window, "Mode/exponent window bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized checks")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // verify
  auto* verify = app.add_command("verify", "Run the invariant suites");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites,
                     "Suite selection (repeatable); defaults to the standard set");

  // ope derive-tt
  auto* ope = app.add_command("ope", "Operator product expansion commands");
  ope->require_subcommand(1);
  auto* derive = ope->add_command(
      "derive-tt", "Derive the energy-momentum OPE from exchange symmetry");
  OpeDeriveOptions derive_options;
  derive->add_option("--order", derive_options.order,
                     "Pole order of the singular part")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  std::string monomial_top;
  auto* top_option = derive->add_option(
      "--monomial-top", monomial_top,
      "Fix the top coefficient to this polynomial in w (e.g. \"w\", \"c/2\")");
  derive->add_flag("--check-only", derive_options.check_only,
                   "Validate an OPE fixture instead of deriving");
  std::string ope_path;
  auto* ope_option =
      derive->add_option("--ope", ope_path, "OPE declaration file for --check-only");

  // cocycle solve
  auto* cocycle = app.add_command("cocycle", "Cohomology commands");
  cocycle->require_subcommand(1);
  auto* solve = cocycle->add_command(
      "solve", "Solve the diagonal cocycle condition and split off coboundaries");
  std::optional<int> sweep_to;
  int sweep_value = 0;
  auto* sweep_option =
      solve->add_option("--sweep-to", sweep_value,
                        "Repeat the solve for every window up to this bound");

  // bracket
  auto* bracket =
      app.add_command("bracket", "Evaluate one bracket cell through all routes");
  int bracket_m = 0;
  int bracket_n = 0;
  bracket->add_option("m", bracket_m, "First mode index")->required();
  bracket->add_option("n", bracket_n, "Second mode index")->required();

  app.require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    out << app.help() << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& parse_error) {
    err << "usage error: " << parse_error.what() << "\n";
    return kExitUsage;
  }

  config.format =
      format == "json" ? RunConfig::Format::json : RunConfig::Format::text;
  config.suites = suites;
  if (top_option->count() > 0) {
    derive_options.monomial_top = monomial_top;
  }
  if (ope_option->count() > 0) {
    derive_options.ope_path = ope_path;
  }
  if (sweep_option->count() > 0) {
    sweep_to = sweep_value;
  }

  try {
    Report report;
    if (verify->parsed()) {
      for (const auto& name : config.suites) {
        if (!suite_exists(name)) {
          err << "usage error: unknown suite " << name << "\n";
          return kExitUsage;
        }
      }
      report = cmd_verify(config);
    } else if (ope->parsed()) {
      report = cmd_ope_derive_tt(config, derive_options);
    } else if (cocycle->parsed()) {
      report = cmd_cocycle_solve(config, sweep_to);
    } else if (bracket->parsed()) {
      report = cmd_bracket(bracket_m, bracket_n, config);
    } else {
      err << "usage error: no command\n";
      return kExitUsage;
    }
    out << report.render();
    return report.exit_code();
  } catch (const WindowExhaustion& error) {
    err << "window exhausted: " << error.what() << "\n";
    return kExitWindowExhausted;
  } catch (const UnderDeterminedWindow& error) {
    err << "window exhausted: " << error.what() << "\n";
    return kExitWindowExhausted;
  } catch (const InvalidInput& error) {
    err << "usage error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace virasoro
