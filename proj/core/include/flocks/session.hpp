#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flocks/flock.hpp"
#include "flocks/harness.hpp"

namespace flocks {

// Exit codes shared by the script runner and the CLI binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCommandError = 1;
inline constexpr int kExitCheckFailure = 2;
inline constexpr int kExitIoError = 3;

struct SessionOptions {
  bool auto_freshen = true;
  enum class Semantics { Ours, Fukv } semantics = Semantics::Ours;
};

/// One iterated-change session: a current flock plus a replayable history.
/// A failing command never changes the session flock.
class Session {
 public:
  Session(Flock initial, SessionOptions options);

  /// Executes one command line and returns its transcript output.
  /// Recognized commands: load, save, show, beliefs, believe, contract,
  /// expand, merge, revise, normalize, identical, equiv, undo, scenario,
  /// check. Errors are reported in the output, never thrown.
  std::string execute(const std::string& line);

  /// Worst exit code seen so far (kExitOk when everything succeeded).
  int status() const { return status_; }

  const Flock& flock() const { return flock_; }
  const std::vector<std::pair<std::string, Flock>>& history() const {
    return history_;
  }

 private:
  std::string apply(const std::string& command, Flock next);
  std::string state_text() const;

  Flock flock_;
  SessionOptions options_;
  std::vector<std::pair<std::string, Flock>> history_;
  int status_ = kExitOk;
};

/// Runs a whole script (one command per line, `#` comments, blank lines
/// ignored) and returns the transcript; *exit_status receives the worst
/// exit code.
std::string run_script(std::string_view script, Flock initial,
                       SessionOptions options, int* exit_status);

/// Built-in replays: niamey, fukv-contrast, syntax-sensitivity.
std::string scenario(const std::string& name);

/// Dispatches a harness check by CLI name (lemma-contraction,
/// theorem-merge, expansion, commutativity, persistence).
CheckReport run_check(const std::string& name, const TrialConfig& cfg);

}  // namespace flocks
