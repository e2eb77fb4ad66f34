#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypex::cli {

// Entry point of the `hypex` tool. Returns the process exit code; failures
// are written to `err` as a single JSON object {"error": ..., "message": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypex::cli
