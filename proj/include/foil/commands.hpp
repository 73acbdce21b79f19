#pragma once

// The command-line operations, over in-memory text. Each returns the exit
// code together with what should go to stdout and stderr.

#include <cstdint>
#include <string>

#include "foil/fuzz.hpp"

namespace foil {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;  // unbound variable, unknown --var, not equivalent, fuzz failures
inline constexpr int parse_error = 2;
inline constexpr int fuel_exhausted = 3;
}  // namespace exit_code

inline constexpr std::uint64_t kDefaultFuel = 10000;

// Program text plus the name used for it in error messages.
struct Source {
  std::string name;
  std::string text;
};

CommandResult cmd_resolve(const Source& source, bool closed);
CommandResult cmd_subst(const Source& source, const std::string& var, const Source& replacement);
CommandResult cmd_normalize(const Source& source, std::uint64_t fuel = kDefaultFuel);
CommandResult cmd_alpha_eq(const Source& first, const Source& second);
CommandResult cmd_fuzz(const FuzzConfig& config);

}  // namespace foil
