#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace virasoro {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, window_exhausted };

std::string status_name(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  Json counterexample;  // null unless the check failed
  double millis = 0.0;  // shown in text output only, to keep JSON reproducible
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  CheckStatus status() const;
};

struct RunConfig {
  int window = 8;
  std::uint64_t seed = 20240314;
  std::vector<std::string> suites;  // empty selects the default set
  enum class Format { text, json } format = Format::text;
};

/// Machine-readable outcome of one command. The JSON form is fully
/// determined by the command, configuration and seed; wall-clock timings
/// appear in the text rendering only.
struct Report {
  std::string command;
  RunConfig config;
  std::vector<SuiteResult> suites;
  Json extra;  // command-specific payload

  long passed() const;
  long failed() const;
  long window_exhausted() const;

  /// 0 all pass, 1 any failure, 3 window exhaustion without failures.
  int exit_code() const;

  Json to_json() const;
  std::string to_text() const;
  std::string render() const;
};

}  // namespace virasoro
