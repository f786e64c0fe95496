#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rosimon/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "rosimon: streaming robust-satisfaction-interval monitor for STL formulas over CSV "
      "traces"};

  rosimon::cli::RunConfig cfg;
  std::string formula;
  std::string formula_file;
  std::string input = "-";
  std::vector<std::string> bounds;
  double delta = 0.0;
  bool no_early_stop = false;
  bool final_only = false;
  bool no_sliding_optim = false;

  app.add_option("-f,--formula", formula, "Formula text, e.g. 'G[0,5](x < 2)'");
  app.add_option("--formula-file", formula_file, "Read the formula from a file");
  app.add_option("-i,--input", input, "Input CSV (header: time,var,...); '-' for stdin")
      ->capture_default_str();
  app.add_option("--bound", bounds,
                 "Variable range VAR=LO,HI used for unknown-future bounds; repeatable; "
                 "'inf'/'-inf' allowed");
  app.add_option("--delta", delta,
                 "Guaranteed minimum gap between samples (required for untimed formulas "
                 "with non-atomic subformulas)");
  app.add_flag("--no-early-stop", no_early_stop, "Keep consuming samples after the verdict is decided");
  app.add_flag("--final-only", final_only, "Print only the summary record");
  app.add_flag("--no-sliding-optim", no_sliding_optim,
               "Disable the singular-prefix sliding-filter shortcut (debugging aid)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rosimon::cli::kExitUsage;
  }

  cfg.formula_text = formula;
  cfg.formula_file = formula_file;
  cfg.input_path = input;
  cfg.early_stop = !no_early_stop;
  cfg.final_only = final_only;
  cfg.monitor.sliding_optimization = !no_sliding_optim;
  if (delta > 0.0) cfg.delta = delta;
  for (const auto& b : bounds) {
    auto parsed = rosimon::cli::parse_bound(b);
    if (!parsed) {
      std::cerr << "error: malformed --bound '" << b << "' (expected VAR=LO,HI)\n";
      return rosimon::cli::kExitUsage;
    }
    cfg.bounds[parsed->first] = parsed->second;
  }

  return rosimon::cli::run(cfg, std::cin, std::cout, std::cerr);
}
