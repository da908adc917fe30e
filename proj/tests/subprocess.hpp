// Minimal popen-based runner for exercising the CLI binary from tests.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testutil {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

inline RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

#ifndef DOE_CLI_PATH
#define DOE_CLI_PATH "doe"
#endif

inline std::string cli_path() { return DOE_CLI_PATH; }

}  // namespace testutil
