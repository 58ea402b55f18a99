#pragma once

#include <iosfwd>
#include <string>

namespace slme {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 ok, 2 config error, 3 numerical failure,
// 4 degenerate stationary subspace (design, or steady with --strict).
int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_dir, bool strict_kernel, std::ostream& out,
                std::ostream& err);

/// Argv-level entry point used by the slme binary.
int run_cli(int argc, const char* const* argv);

}  // namespace slme
