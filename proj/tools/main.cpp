#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"picard: exact certificates for line-bundle obstructions on "
               "derived deformations of projective hypersurfaces"};

  picard::cli::RunConfig config;
  std::string mode_str, format_str = "text", scenario_str, poly_file;
  long long m_val = -1;
  int bound = -1;

  app.add_option("--n", config.n, "projective dimension n (variables x0..xn)")->required();
  app.add_option("--mode", mode_str, "check | cohomology | obstruct | k3 | report")
      ->required();
  auto* poly_opt = app.add_option("--poly", config.poly_text, "polynomial text");
  auto* file_opt =
      app.add_option("--poly-file", poly_file, "read polynomial from file ('-' = stdin)");
  poly_opt->excludes(file_opt);
  app.add_option("--m", m_val, "line bundle twist O(m), or O(k) for the trivial extension");
  app.add_option("--bound", bound, "truncation bound B");
  app.add_option("--format", format_str, "text | json");
  app.add_option("--step-cap", config.step_cap, "Buchberger pair-reduction cap");
  app.add_flag("--assume-pic-z", config.assume_pic_z,
               "assert the external premise Pic(tX) = Z (required for report mode)");
  app.add_option("--scenario", scenario_str,
                 "report scenario: generator | zero | trivial (default: inferred)");

  CLI11_PARSE(app, argc, argv);

  auto mode = picard::cli::mode_from_string(mode_str);
  if (!mode) {
    std::cerr << "unknown mode: " << mode_str << "\n";
    return 3;
  }
  config.mode = *mode;
  config.m = static_cast<long>(m_val);
  if (bound >= 0) config.bound = bound;
  if (format_str == "json") {
    config.format = picard::cli::OutputFormat::Json;
  } else if (format_str != "text") {
    std::cerr << "unknown format: " << format_str << "\n";
    return 3;
  }
  if (!scenario_str.empty()) {
    auto sc = picard::cli::scenario_from_string(scenario_str);
    if (!sc) {
      std::cerr << "unknown scenario: " << scenario_str << "\n";
      return 3;
    }
    config.scenario = *sc;
  }
  if (!poly_file.empty()) {
    if (poly_file == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      config.poly_text = ss.str();
    } else {
      std::ifstream in(poly_file);
      if (!in) {
        std::cerr << "cannot open polynomial file: " << poly_file << "\n";
        return 3;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      config.poly_text = ss.str();
    }
  }

  picard::cli::RunResult result = picard::cli::run(config);
  std::cout << picard::cli::emit_report(result, config.format);
  return result.exit_code;
}
