#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dnull/rgbound.hpp"

namespace dnull::cli {

enum ExitCode : int { ok = 0, not_found = 1, parse_error = 2, resource_cap = 3 };

/// Runs one command; `args` excludes the program name. Human output goes to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON form of a decomposition trace (schema "dnull-trace/1").
std::string trace_json(const DecompositionResult& res, const DiffSystem& sys);

}  // namespace dnull::cli
