#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flocks/session.hpp"

namespace {

flocks::Flock initial_flock(const std::string& path) {
  if (path.empty()) return {};
  return flocks::load_flock(path);
}

flocks::SessionOptions make_options(bool no_auto_freshen,
                                    const std::string& semantics) {
  flocks::SessionOptions options;
  options.auto_freshen = !no_auto_freshen;
  if (semantics == "fukv")
    options.semantics = flocks::SessionOptions::Semantics::Fukv;
  return options;
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flocks: iterated non-prioritized belief change over flocks of bases"};
  app.require_subcommand(1);

  std::string initial_path, semantics = "ours", script_path, name;
  bool no_auto_freshen = false;
  std::uint64_t seed = 0;
  int trials = 100, atoms = 3, depth = 4, explorer_atoms = 2;
  std::string target_path;

  auto add_session_flags = [&](CLI::App* cmd) {
    cmd->add_option("--initial", initial_path, "initial flock file");
    cmd->add_option("--semantics", semantics, "ours | fukv")
        ->check(CLI::IsMember({"ours", "fukv"}));
    cmd->add_flag("--no-auto-freshen", no_auto_freshen,
                  "reject expansion by occurring formulas");
  };

  CLI::App* run = app.add_subcommand("run", "run a command script (- for stdin)");
  run->add_option("script", script_path, "script file")->required();
  add_session_flags(run);

  CLI::App* repl = app.add_subcommand("repl", "interactive session");
  add_session_flags(repl);

  CLI::App* scen = app.add_subcommand("scenario", "replay a built-in scenario");
  scen->add_option("name", name, "niamey | fukv-contrast | syntax-sensitivity")
      ->required();

  CLI::App* check = app.add_subcommand("check", "run a harness check");
  check->add_option("name", name, "check name")->required();
  check->add_option("--seed", seed, "trial seed");
  check->add_option("--trials", trials, "trial count");
  check->add_option("--atoms", atoms, "atom alphabet size");

  CLI::App* explore =
      app.add_subcommand("explore", "constructibility search for a target flock");
  explore->add_option("target", target_path, "target flock file")->required();
  explore->add_option("--depth", depth, "search depth (0..4)");
  explore->add_option("--atoms", explorer_atoms, "signature size (1..2)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      std::string script;
      if (script_path == "-") {
        script = read_all(std::cin);
      } else {
        std::ifstream in(script_path);
        if (!in) {
          std::cerr << "error: cannot open " << script_path << "\n";
          return flocks::kExitIoError;
        }
        script = read_all(in);
      }
      int status = flocks::kExitOk;
      std::cout << flocks::run_script(script, initial_flock(initial_path),
                                      make_options(no_auto_freshen, semantics),
                                      &status);
      return status;
    }
    if (repl->parsed()) {
      flocks::Session session(initial_flock(initial_path),
                              make_options(no_auto_freshen, semantics));
      std::string line;
      while (std::cout << "flocks> " << std::flush, std::getline(std::cin, line)) {
        if (line == "quit" || line == "exit") break;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::cout << session.execute(line);
      }
      return session.status();
    }
    if (scen->parsed()) {
      std::cout << flocks::scenario(name);
      return flocks::kExitOk;
    }
    if (check->parsed()) {
      flocks::TrialConfig cfg;
      cfg.seed = seed;
      cfg.trials = trials;
      cfg.atoms = atoms;
      flocks::CheckReport report = flocks::run_check(name, cfg);
      std::cout << report.to_text();
      return report.passed() ? flocks::kExitOk : flocks::kExitCheckFailure;
    }
    if (explore->parsed()) {
      flocks::Flock target = flocks::load_flock(target_path);
      auto result = flocks::explore_constructibility(target, depth, explorer_atoms);
      std::cout << result.to_text();
      return flocks::kExitOk;
    }
  } catch (const flocks::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return flocks::kExitIoError;
  } catch (const flocks::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return flocks::kExitIoError;
  } catch (const flocks::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return flocks::kExitCommandError;
  }
  return flocks::kExitOk;
}
