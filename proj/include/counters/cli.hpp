// Copyright (c) 2026 The counters Authors. MIT license; see LICENSE.
//
// Command-line front end: eval, expand, coeff, and check subcommands over
// the expression grammar in text.hpp. Exit statuses: 0 ok, 1 usage error,
// 2 parse error, 3 undefined operation, 4 oracle mismatch.

#ifndef COUNTERS_CLI_HPP
#define COUNTERS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace counters {

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// main() adapter writing to stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace counters

#endif  // COUNTERS_CLI_HPP
