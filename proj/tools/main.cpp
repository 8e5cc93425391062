#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "blockscope/corpus.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/runner.hpp"

using namespace blockscope;

namespace {

constexpr int kInputError = 1;
constexpr int kGoldenMismatch = 4;

std::string task_help() {
  std::string s = "task: all, verify:all";
  for (auto& n : section_names()) s += ", " + n;
  for (auto& n : verify_names()) s += ", verify:" + n;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block, support-variety and flat-point analysis of small cocommutative Hopf algebras"};
  RunConfig cfg;
  std::string task, out, golden;
  bool list = false, update_golden = false, no_cache = false;
  app.add_option("task", task, task_help());
  app.add_option("-a,--algebra", cfg.algebra, "builtin name (see --list) or algebra spec file")->capture_default_str();
  app.add_option("-c,--cap", cfg.cap, "cohomological degree cap")->capture_default_str()->check(CLI::Range(2, 64));
  app.add_option("-s,--seed", cfg.seed, "seed for randomized steps")->capture_default_str();
  app.add_option("-b,--budget", cfg.budget, "sampling budget for flat-point searches")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--field", cfg.field, "base change to F_q before analysis");
  app.add_flag("--slow", cfg.slow, "run expensive checks (enveloping projectivity on large algebras)");
  app.add_option("-o,--out", out, "write the report here instead of stdout");
  app.add_option("--golden", golden, "compare the report against this golden report");
  app.add_flag("--update-golden", update_golden, "write the report to the --golden path");
  app.add_flag("--no-cache", no_cache, "do not read or write the report cache");
  app.add_flag("--list", list, "list builtin algebras and exit");
  CLI11_PARSE(app, argc, argv);
  cfg.cache = !no_cache;

  if (list) {
    for (auto& e : builtins()) std::cout << e.name << "\t" << e.summary << "\n";
    return 0;
  }
  if (task.empty()) {
    std::cerr << "missing task\n" << app.help();
    return kInputError;
  }
  if (!is_task(task)) {
    std::cerr << "unknown task '" << task << "'\n" << task_help() << "\n";
    return kInputError;
  }

  RunResult res;
  try {
    res = run(task, cfg);
  } catch (const UnsupportedError& ex) {
    std::cerr << "unsupported: " << ex.what() << "\n";
    return 3;
  } catch (const PreconditionError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  }

  const std::string text = dump_report(res.report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!(f << text)) {
      std::cerr << "error: cannot write " << out << "\n";
      return kInputError;
    }
  }
  if (res.exit_code == 3) std::cerr << "unsupported: " << res.message << "\n";
  if (res.exit_code == 2) std::cerr << res.message << "\n";
  if (res.report.value("inconclusive", false)) std::cerr << "note: some verdicts are inconclusive at this cap\n";

  if (!golden.empty()) {
    if (update_golden) {
      std::ofstream g(golden);
      if (!(g << text)) {
        std::cerr << "error: cannot write " << golden << "\n";
        return kInputError;
      }
    } else {
      try {
        auto d = compare_golden(res.report, load_json(golden));
        for (auto& line : d) std::cerr << "golden: " << line << "\n";
        if (!d.empty() && res.exit_code == 0) return kGoldenMismatch;
      } catch (const PreconditionError& ex) {
        std::cerr << "error: missing golden: " << ex.what() << "\n";
        return kInputError;
      }
    }
  }
  return res.exit_code;
}
