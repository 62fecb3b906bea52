#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "picard/obstruction.hpp"

namespace picard::cli {

enum class Mode { Check, Cohomology, Obstruct, K3, Report };
enum class OutputFormat { Text, Json };
enum class Scenario { Auto, Generator, Zero, Trivial };

std::optional<Mode> mode_from_string(const std::string& s);
std::optional<Scenario> scenario_from_string(const std::string& s);

struct RunConfig {
  Mode mode = Mode::Check;
  int n = -1;
  std::string poly_text;  // empty: no polynomial given
  long m = -1;
  std::optional<int> bound;
  OutputFormat format = OutputFormat::Text;
  uint64_t step_cap = 1'000'000;
  bool assume_pic_z = false;
  Scenario scenario = Scenario::Auto;
};

// 0 certified success, 1 certified negative, 2 inconclusive, 3 input error
struct RunResult {
  int exit_code = 3;
  nlohmann::ordered_json doc;
  std::string text;
};

/// Executes the pipeline for the configured mode.  Never throws: module
/// errors become structured report entries with the matching exit code.
RunResult run(const RunConfig& config);

/// Deterministic serialization of a completed result.
std::string emit_report(const RunResult& result, OutputFormat format);

}  // namespace picard::cli
