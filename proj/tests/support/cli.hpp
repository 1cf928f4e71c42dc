#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI binary with the given argument string, capturing stdout.
// stderr is dropped so diagnostic lines never mix into JSON/CSV output.
inline CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(DOUBLET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = ::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = ::pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace testsupport
