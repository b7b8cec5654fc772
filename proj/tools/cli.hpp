#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace parcomp::cli {

enum class ColorMode { Auto, Never, Always };

struct Environment {
  std::optional<std::string> color;  // value of PARCOMP_COLOR
  bool stdout_is_tty = false;
};

// Exit codes: 0 success, 1 integrity failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIntegrity = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace parcomp::cli
