#include "flocks/session.hpp"

#include <sstream>

#include "flocks/estate.hpp"

namespace flocks {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::pair<std::string, std::string> split_command(const std::string& line) {
  std::size_t space = line.find_first_of(" \t");
  if (space == std::string::npos) return {line, ""};
  return {line.substr(0, space), trim(line.substr(space + 1))};
}

std::string flock_text(const Flock& flock) {
  std::string text = render_flock(flock);
  return text.empty() ? "(empty flock)\n" : text;
}

}  // namespace

Session::Session(Flock initial, SessionOptions options)
    : flock_(std::move(initial)), options_(options) {
  history_.emplace_back("(initial)", flock_);
}

std::string Session::state_text() const {
  return flock_text(flock_) +
         "beliefs: " + render_formula(belief_formula(flock_)) + "\n";
}

std::string Session::apply(const std::string& command, Flock next) {
  flock_ = std::move(next);
  history_.emplace_back(command, flock_);
  return state_text();
}

std::string Session::execute(const std::string& raw) {
  std::string line = trim(raw);
  auto [command, argument] = split_command(line);
  try {
    if (command == "show") {
      if (argument == "history") {
        std::string out;
        for (const auto& [cmd, flock] : history_) out += cmd + "\n";
        return out;
      }
      return flock_text(flock_);
    }
    if (command == "beliefs")
      return "beliefs: " + render_formula(belief_formula(flock_)) + "\n";
    if (command == "believe") {
      bool yes = believed(flock_, parse_formula(argument));
      return std::string("believed: ") + (yes ? "yes" : "no") + "\n";
    }
    if (command == "contract") {
      Formula goal = parse_formula(argument);
      Flock next = options_.semantics == SessionOptions::Semantics::Fukv
                       ? fukv_delete(flock_, goal)
                       : contract(flock_, goal);
      return apply(line, std::move(next));
    }
    if (command == "expand") {
      ExpandResult res =
          expand(flock_, parse_formula(argument), options_.auto_freshen);
      std::string note;
      if (render_formula(res.used) != argument)
        note = "used: " + render_formula(res.used) + "\n";
      return note + apply(line, std::move(res.flock));
    }
    if (command == "revise")
      return apply(line, revise(flock_, parse_formula(argument)));
    if (command == "normalize") return apply(line, normalize(flock_));
    if (command == "merge")
      return apply(line, merge(flock_, load_flock(argument)));
    if (command == "load") return apply(line, load_flock(argument));
    if (command == "save") {
      save_flock(flock_, argument);
      return "saved " + argument + "\n";
    }
    if (command == "identical") {
      bool yes = identical(flock_, load_flock(argument));
      return std::string("identical: ") + (yes ? "yes" : "no") + "\n";
    }
    if (command == "equiv") {
      int depth = 2;
      std::string path = argument;
      if (auto at = argument.find("--depth"); at != std::string::npos) {
        depth = std::stoi(trim(argument.substr(at + 7)));
        path = trim(argument.substr(0, at));
      }
      bool yes = behaviorally_equivalent(generate(flock_),
                                         generate(load_flock(path)), depth);
      return std::string("equivalent: ") + (yes ? "yes" : "no") + "\n";
    }
    if (command == "undo") {
      if (history_.size() <= 1) {
        status_ = std::max(status_, kExitCommandError);
        return "error: nothing to undo\n";
      }
      history_.pop_back();
      flock_ = history_.back().second;
      return state_text();
    }
    if (command == "scenario") return scenario(argument);
    if (command == "check") {
      std::istringstream args(argument);
      std::string name, flag;
      args >> name;
      TrialConfig cfg;
      while (args >> flag) {
        long long value = 0;
        if (!(args >> value)) throw Error("check: flag " + flag + " needs a value");
        if (flag == "--seed")
          cfg.seed = static_cast<std::uint64_t>(value);
        else if (flag == "--trials")
          cfg.trials = static_cast<int>(value);
        else if (flag == "--atoms")
          cfg.atoms = static_cast<int>(value);
        else
          throw Error("check: unknown flag " + flag);
      }
      CheckReport report = run_check(name, cfg);
      if (!report.passed()) status_ = std::max(status_, kExitCheckFailure);
      return report.to_text();
    }
    throw Error("unknown command: " + command);
  } catch (const ParseError& e) {
    status_ = std::max(status_, kExitIoError);
    return std::string("error: ") + e.what() + "\n";
  } catch (const IoError& e) {
    status_ = std::max(status_, kExitIoError);
    return std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    status_ = std::max(status_, kExitCommandError);
    return std::string("error: ") + e.what() + "\n";
  }
}

std::string run_script(std::string_view script, Flock initial,
                       SessionOptions options, int* exit_status) {
  Session session(std::move(initial), options);
  std::istringstream in{std::string(script)};
  std::string line, transcript;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    transcript += "> " + line + "\n";
    transcript += session.execute(line);
  }
  if (exit_status != nullptr) *exit_status = session.status();
  return transcript;
}

CheckReport run_check(const std::string& name, const TrialConfig& cfg) {
  if (name == "lemma-contraction") return check_lemma_contraction(cfg);
  if (name == "theorem-merge") return check_theorem_merge(cfg);
  if (name == "expansion") return check_expansion(cfg);
  if (name == "commutativity") return check_commutativity(cfg);
  if (name == "persistence") return check_persistence(cfg);
  throw Error("unknown check: " + name);
}

namespace {

std::string scenario_niamey() {
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  Flock start{Base{a, b}};
  std::string out = "=== scenario niamey ===\n";
  out += "initial flock (Niamey is a Nigerian university town):\n";
  out += flock_text(start);
  out += "beliefs: " + render_formula(belief_formula(start)) + "\n";
  out += "--- stage 1: retract the conjunction, then rule out A ---\n";
  out += run_script("contract A & B\ncontract A\n", start, {}, nullptr);
  out += "--- stage 2: after the retraction, new support for B ---\n";
  Flock contracted = contract(start, Formula::conjunction(a, b));
  out += flock_text(contracted);
  out += "beliefs: " + render_formula(belief_formula(contracted)) + "\n";
  out += run_script("expand B\ncontract B\n", contracted, {}, nullptr);
  return out;
}

std::string scenario_fukv_contrast() {
  std::string out = "=== scenario fukv-contrast ===\n";
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  Flock start{Base{a, b}};
  out += "initial flock:\n" + flock_text(start);
  out += "--- our semantics: contraction order does not matter ---\n";
  out += "[order 1: contract A & B, then A]\n";
  out += run_script("contract A & B\ncontract A\n", start, {}, nullptr);
  out += "[order 2: contract A, then A & B]\n";
  out += run_script("contract A\ncontract A & B\n", start, {}, nullptr);
  Flock ours1 = contract(contract(start, Formula::conjunction(a, b)), a);
  Flock ours2 = contract(contract(start, a), Formula::conjunction(a, b));
  out += std::string("orders identical: ") +
         (identical(ours1, ours2) ? "yes" : "no") + "\n";
  out += "--- fukv semantics: minimal-set deletion is order-sensitive ---\n";
  SessionOptions fukv;
  fukv.semantics = SessionOptions::Semantics::Fukv;
  out += "[order 1: contract A & B, then A]\n";
  out += run_script("contract A & B\ncontract A\n", start, fukv, nullptr);
  out += "[order 2: contract A, then A & B]\n";
  out += run_script("contract A\ncontract A & B\n", start, fukv, nullptr);
  Flock fukv1 = fukv_delete(fukv_delete(start, Formula::conjunction(a, b)), a);
  Flock fukv2 = fukv_delete(fukv_delete(start, a), Formula::conjunction(a, b));
  out += std::string("orders identical: ") +
         (identical(fukv1, fukv2) ? "yes" : "no") + "\n";
  return out;
}

std::string scenario_syntax_sensitivity() {
  std::string out = "=== scenario syntax-sensitivity ===\n";
  Formula a = Formula::atom("A"), b = Formula::atom("B");
  Formula a_prime = Formula::negation(Formula::negation(a));
  Flock source{Base{a_prime}, Base{a, b}};
  Flock replaced{Base{a}, Base{a, b}};
  out += "flock with A' = ~~A alongside { A ; B }:\n";
  out += run_script("show\nbelieve A\nbelieve A & B\n", source, {}, nullptr);
  out += "replacing A' with A collapses the flock:\n";
  out += run_script("show\nnormalize\nbelieve A & B\n", replaced, {}, nullptr);
  return out;
}

}  // namespace

std::string scenario(const std::string& name) {
  if (name == "niamey") return scenario_niamey();
  if (name == "fukv-contrast") return scenario_fukv_contrast();
  if (name == "syntax-sensitivity") return scenario_syntax_sensitivity();
  throw Error("unknown scenario: " + name);
}

}  // namespace flocks
