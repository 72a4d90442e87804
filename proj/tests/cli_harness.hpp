#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

// Runs the installed CLI binary (path from $BERTRAND_CLI, set by CTest) and
// captures stdout plus the exit code. stderr is dropped.
struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline std::string cli_path_from_env() {
  const char* p = std::getenv("BERTRAND_CLI");
  if (p == nullptr || *p == '\0') {
    throw std::runtime_error("BERTRAND_CLI environment variable not set");
  }
  return p;
}

inline CliResult run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_path_from_env() + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = std::move(out);
  return r;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}
