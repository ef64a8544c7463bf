#include "virasoro/report.hpp"

#include <sstream>

namespace virasoro {

std::string status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::window_exhausted:
      return "window-exhausted";
  }
  return "unknown";
}

CheckStatus SuiteResult::status() const {
  CheckStatus worst = CheckStatus::pass;
  for (const auto& check : checks) {
    if (check.status == CheckStatus::fail) {
      return CheckStatus::fail;
    }
    if (check.status == CheckStatus::window_exhausted) {
      worst = CheckStatus::window_exhausted;
    }
  }
  return worst;
}

long Report::passed() const {
  long count = 0;
  for (const auto& suite : suites) {
    for (const auto& check : suite.checks) {
      count += check.status == CheckStatus::pass ? 1 : 0;
    }
  }
  return count;
}

long Report::failed() const {
  long count = 0;
  for (const auto& suite : suites) {
    for (const auto& check : suite.checks) {
      count += check.status == CheckStatus::fail ? 1 : 0;
    }
  }
  return count;
}

long Report::window_exhausted() const {
  long count = 0;
  for (const auto& suite : suites) {
    for (const auto& check : suite.checks) {
      count += check.status == CheckStatus::window_exhausted ? 1 : 0;
    }
  }
  return count;
}

int Report::exit_code() const {
  if (failed() > 0) {
    return 1;
  }
  if (window_exhausted() > 0) {
    return 3;
  }
  return 0;
}

Json Report::to_json() const {
  Json out;
  out["schema_version"] = 1;
  out["command"] = command;
  Json cfg;
  cfg["window"] = config.window;
  cfg["seed"] = config.seed;
  cfg["format"] = config.format == RunConfig::Format::json ? "json" : "text";
  cfg["suites"] = config.suites;
  out["config"] = cfg;
  Json suite_list = Json::array();
  for (const auto& suite : suites) {
    Json s;
    s["name"] = suite.name;
    s["status"] = status_name(suite.status());
    Json checks = Json::array();
    for (const auto& check : suite.checks) {
      Json c;
      c["name"] = check.name;
      c["status"] = status_name(check.status);
      if (check.status == CheckStatus::fail) {
        c["counterexample"] = check.counterexample;
      }
      checks.push_back(c);
    }
    s["checks"] = checks;
    suite_list.push_back(s);
  }
  out["suites"] = suite_list;
  Json summary;
  summary["passed"] = passed();
  summary["failed"] = failed();
  summary["window_exhausted"] = window_exhausted();
  out["summary"] = summary;
  if (!extra.is_null()) {
    out["extra"] = extra;
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "== " << command << " (window " << config.window << ", seed " << config.seed
      << ") ==\n";
  for (const auto& suite : suites) {
    out << "[" << status_name(suite.status()) << "] " << suite.name << "\n";
    for (const auto& check : suite.checks) {
      out << "  [" << status_name(check.status) << "] " << check.name;
      if (check.millis > 0) {
        out << " (" << check.millis << " ms)";
      }
      out << "\n";
      if (check.status == CheckStatus::fail && !check.counterexample.is_null()) {
        out << "    counterexample: " << check.counterexample.dump() << "\n";
      }
    }
  }
  if (!extra.is_null()) {
    for (const auto& [key, value] : extra.items()) {
      if (value.is_string()) {
        out << key << ": " << value.get<std::string>() << "\n";
      } else if (value.is_array() && !value.empty() && value.begin()->is_string()) {
        out << key << ":\n";
        for (const auto& line : value) {
          out << "  " << line.get<std::string>() << "\n";
        }
      } else {
        out << key << ": " << value.dump() << "\n";
      }
    }
  }
  out << "summary: " << passed() << " passed, " << failed() << " failed, "
      << window_exhausted() << " window-exhausted\n";
  return out.str();
}

std::string Report::render() const {
  if (config.format == RunConfig::Format::json) {
    return to_json().dump(2) + "\n";
  }
  return to_text();
}

}  // namespace virasoro
