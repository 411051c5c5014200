#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stallings/word.hpp"

namespace stallings::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2, kBudgetError = 3 };

struct SubgroupFile {
  Alphabet alphabet;
  std::vector<Word> gens;
};

// First meaningful line `n=<int>`, then one word per line; `#` starts a
// comment. Throws SyntaxError naming the offending line.
SubgroupFile parse_subgroup_text(const std::string& text);
SubgroupFile parse_subgroup_file(const std::string& path);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stallings::cli
