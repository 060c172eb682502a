// Spawning the CLI under test. The binary path comes from the PAPERCUT_CLI
// environment variable (set by CTest); tests run with the repository root
// as working directory so `data/...` paths resolve.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string cli_path() {
  const char* path = std::getenv("PAPERCUT_CLI");
  return path ? path : "build/tools/papercut";
}

inline CliRun run_cli(const std::string& arguments) {
  static int counter = 0;
  const std::string err_file =
      "/tmp/papercut_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".err";
  const std::string command = cli_path() + " " + arguments + " 2>" + err_file;

  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return run;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) run.exit_code = WEXITSTATUS(status);

  std::ifstream err_stream(err_file);
  std::ostringstream err;
  err << err_stream.rdbuf();
  run.err = err.str();
  std::remove(err_file.c_str());
  return run;
}

}  // namespace testutil
