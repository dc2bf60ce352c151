// Command-line front end: gzak <command> [subcommand] --scenario PATH [flags]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gzak/report.hpp"
#include "gzak/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Zak-transform analysis of group-invariant spaces on finite weighted spaces"};
  app.require_subcommand(1);

  std::string scenario_path;
  double tolerance = 1e-10;
  std::string format = "structured";
  unsigned parallel = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario_path, "Scenario file (JSON)")->required();
    sub->add_option("--tolerance", tolerance, "Rank / support / Parseval tolerance, in (0, 1)");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"structured", "csv-fibers"}));
    sub->add_option("--parallel", parallel, "Worker threads for fiber computations")->check(CLI::PositiveNumber);
  };

  const char* commands[][2] = {
      {"validate", "Check the action axioms and freeness"},
      {"zak", "Zak transform of every generator"},
      {"range", "Range function dimensions of the generated space"},
      {"length", "Minimal number of generators of the generated space"},
      {"member", "Membership of the scenario's test functions"},
      {"frame", "Frame bounds of the orbit system"},
      {"riesz", "Riesz bounds of the orbit system"},
      {"bracket", "Bracket map between generators"},
      {"decompose", "Orthogonal decomposition into Parseval-generated spaces"},
      {"verify", "Cross-check fiberwise results against the dense oracle"},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c[0], c[1]));

  std::string translation_sub;
  CLI::App* translation = app.add_subcommand("translation", "Subgroup translations on a finite abelian group");
  translation->add_option("operation", translation_sub, "weil | zak | fiberize | duality | analyze")
      ->required()
      ->check(CLI::IsMember({"weil", "zak", "fiberize", "duality", "analyze"}));
  add_common(translation);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gzak::kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  gzak::RunOptions options;
  options.settings.tolerance = tolerance;
  options.settings.threads = parallel;
  options.format = format == "csv-fibers" ? gzak::ReportFormat::csv_fibers : gzak::ReportFormat::structured;
  options.subcommand = translation_sub;

  gzak::Scenario scenario;
  try {
    scenario = gzak::parse_scenario(scenario_path);
  } catch (const gzak::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gzak::kExitParse;
  } catch (const gzak::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gzak::kExitValidation;
  }

  const gzak::RunResult result = gzak::run(command, scenario, options);
  (result.diagnostic ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
