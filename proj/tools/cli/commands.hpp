#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "parallelo/checks.hpp"

namespace parallelo::cli {

/// Exit codes: 0 success, 1 hypothesis violation or selftest failure, 2 usage
/// or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads from the process environment.
std::optional<std::string> process_env(const std::string& name);

/// Entry point behind main(); args exclude the program name. Machine-readable
/// output goes to `out` (or --out), diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_env);

/// selftest body, exposed so a corrupted counting route can be injected.
int cmd_selftest(const RunConfig& cfg, bool quick, std::ostream& out, std::ostream& err, CheckOptions checks = {});

}  // namespace parallelo::cli
