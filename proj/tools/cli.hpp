#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pknets::cli {

enum Exit : int { ok = 0, verification_failed = 1, input_error = 2, resource_bound = 3 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pknets::cli
