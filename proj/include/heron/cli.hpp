#pragma once

// Command-line front end. Every result is one record on `out` (key=value
// pairs by default, tab-separated with --tsv); diagnostics go to `err`.
//
// Exit codes: 0 success, 1 usage error (unknown command, bad arity,
// malformed rational), 2 domain error (pole, degeneracy, range, not in
// family, failed verification).

#include <iosfwd>
#include <string>
#include <vector>

namespace heron::cli {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_domain = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heron::cli
