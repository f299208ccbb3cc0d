#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end.
//
// Verbs: invariants, phi, covers, quotient, enumerate, search, verify.
// Reports are line-oriented key=value; exit 0 on success, 1 on a negative
// test outcome (covers --expect mismatch, verify with discrepancies),
// 2 on input errors.

namespace dessin {

// args excludes the program name.  INPUT arguments name a file, pass a
// literal, or select standard input with "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace dessin
