#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace semiq {
namespace cli {

/// Runs one CLI invocation. Exit codes: 0 ok, 1 verification mismatch,
/// 2 schema violation, 3 precondition failure, 4 arithmetic overflow,
/// 5 guard/ceiling. Identical inputs produce byte-identical output.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace semiq
