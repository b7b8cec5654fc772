#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  parcomp::cli::Environment env;
  if (const char* color = std::getenv("PARCOMP_COLOR")) env.color = color;
  env.stdout_is_tty = ::isatty(STDOUT_FILENO) != 0;
  return parcomp::cli::run(args, std::cout, std::cerr, env);
}
