// Command-line front end and the JSON threefold document format:
//
//   { "chi_O": -1, "K3": "2", "basket": [ { "r": 26, "a": 1, "count": 1 } ] }
//
// Rationals are strings ("p/q" or "p"); floating-point literals are rejected.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plurigenus/riemann_roch.hpp"

namespace plurigenus::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,     // domain, data-consistency or validation failure; failed verify check
  kMalformedInput = 2,  // unreadable document, bad option, unknown subcommand
  kInternalError = 3,   // two independent computations disagreed
};

/// Parses a threefold document. Syntax errors carry line/column; content
/// errors carry the field path (e.g. "basket[1].a").
ThreefoldData parse_threefold_document(const std::string& text);

/// Inverse of parse_threefold_document (canonical basket order).
std::string to_threefold_document(const ThreefoldData& x);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plurigenus::cli
