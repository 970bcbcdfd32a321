// resonance-lab: batch laboratory for a quadratic dispersive model.
//
// Commands
//   geometry            trace and classify the resonance sets
//   evolve              norm trajectories along a logarithmic time ladder
//   rates               decay-rate verdicts against the predicted laws
//   oscillatory_tables  boundary-profile samples and leading-term tables
//   all                 everything above
//
// Scenario files are strict line-oriented INI; see README for the format.
// Exit status: 0 all hard verdicts pass, 1 some hard verdict failed,
// 2 invalid input or a module refusal (nothing partial is reported as ok).
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resonance_lab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "resonance-lab: resonance geometry, evolution, decay-rate, and "
      "oscillatory-integral tables for a quadratic dispersive model"};
  app.get_formatter()->column_width(28);

  std::string command_text;
  app.add_option("command", command_text,
                 "geometry | evolve | rates | oscillatory_tables | all")
      ->required()
      ->check(CLI::IsMember(
          {"geometry", "evolve", "rates", "oscillatory_tables", "all"}));

  std::vector<std::string> scenario_paths;
  app.add_option("--scenario", scenario_paths,
                 "scenario file (repeatable)")
      ->type_name("FILE");

  std::string out_dir = ".";
  app.add_option("--out", out_dir, "output directory (created if missing)")
      ->envname("RESONANCE_LAB_OUT")
      ->type_name("DIR");

  rlab::RunOptions options;
  app.add_option("--jobs", options.jobs,
                 "requested worker count (runs are serialized for "
                 "bit-identical artifacts)")
      ->check(CLI::PositiveNumber);

  std::optional<double> t_max_cap;
  app.add_option("--t-max", t_max_cap,
                 "cap every experiment time ladder at this time")
      ->check(CLI::PositiveNumber);

  std::optional<int> resolution;
  app.add_option("--resolution", resolution,
                 "override the geometry trace resolution (>= 64)")
      ->check(CLI::Range(64, 1 << 20));

  CLI11_PARSE(app, argc, argv);

  const std::optional<rlab::Command> command =
      rlab::parse_command(command_text);
  if (!command) {
    std::fprintf(stderr, "unknown command: %s\n", command_text.c_str());
    return 2;
  }
  options.out_dir = out_dir;
  options.t_max_cap = t_max_cap;
  options.resolution = resolution;

  // strict parse of every scenario file up front: if any file has any
  // diagnostic, print them all and run nothing
  std::vector<rlab::ScenarioJob> jobs;
  int diagnostics = 0;
  for (const std::string& path : scenario_paths) {
    const rlab::ParseResult parsed = rlab::parse_scenario_file(path);
    for (const rlab::Diagnostic& d : parsed.diagnostics) {
      std::fprintf(stderr, "%s:%d: %s\n", path.c_str(), d.line,
                   d.message.c_str());
      ++diagnostics;
    }
    if (parsed.ok()) jobs.push_back({parsed.file, path});
  }
  if (diagnostics > 0) {
    std::fprintf(stderr, "%d diagnostic(s); nothing was run\n", diagnostics);
    return 2;
  }

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "cannot create output directory %s: %s\n",
                 options.out_dir.c_str(), ec.message().c_str());
    return 2;
  }

  const rlab::RunOutcome outcome = rlab::run_command(*command, jobs, options);

  for (const std::string& e : outcome.errors)
    std::fprintf(stderr, "error: %s\n", e.c_str());
  std::printf("%s: %d pass, %d fail, %d reported; %zu artifact(s) in %s\n",
              rlab::to_string(*command), outcome.pass_count,
              outcome.fail_count, outcome.reported_count,
              outcome.artifacts.size(), options.out_dir.c_str());
  return outcome.exit_code;
}
