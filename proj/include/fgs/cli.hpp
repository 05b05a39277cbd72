#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fgs::cli {

enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kInputError = 2, kBudgetExceeded = 3 };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"graph", "reduce",  "closure",  "subbasis", "core",
                                              "boundary", "explore", "sandwich", "cuts"};
  return names;
}

struct RunConfig {
  std::string command;
  std::string generators;
  /// Inline words; a single entry "@path" reads one word per line from path.
  std::vector<std::string> words;
  /// Unset means FGS_NODE_BUDGET, falling back to the library default.
  std::optional<std::size_t> node_budget;
  bool force_rank = false;
  std::string output = "json";
  bool explain = false;
  bool oracle = false;
  std::optional<std::size_t> cut_index;
};

struct RunResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Splits "a,b,c" into words, or reads "@file" (blank lines and '#' comments skipped).
std::vector<std::string> expand_words(const std::vector<std::string>& words);

RunResult run(const RunConfig& config);

}  // namespace fgs::cli
