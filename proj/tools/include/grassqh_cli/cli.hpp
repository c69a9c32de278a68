#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grassqh::cli {

inline constexpr const char* kSchemaVersion = "1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConsistencyFailure = 1;
inline constexpr int kInvalidInput = 2;

/// Runs the command line `args` (without the program name), writing the
/// document to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders a JSON document (as produced with --format json) in table form.
/// Output equals what --format table prints for the same command.
std::string render_table(const std::string& json_document);

}  // namespace grassqh::cli
