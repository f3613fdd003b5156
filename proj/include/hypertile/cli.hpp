#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypertile::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefused = 1;  // criterion refusal, failed verification, build failure
inline constexpr int kIoError = 2;  // I/O, schema, parse and usage errors

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypertile::cli
