#ifndef SUPEROMNI_TEST_CLI_HELPERS_HPP
#define SUPEROMNI_TEST_CLI_HELPERS_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "superomni/io.hpp"

namespace testutil {

struct CliResult {
  int exitCode = -1;
  std::string output;
};

inline std::string cliPath() {
#ifdef SUPEROMNI_CLI_PATH
  if (const char* env = std::getenv("SUPEROMNI_CLI")) return env;
  return SUPEROMNI_CLI_PATH;
#else
  return std::getenv("SUPEROMNI_CLI") ? std::getenv("SUPEROMNI_CLI") : "superomni";
#endif
}

inline std::string fixturesDir() {
#ifdef SUPEROMNI_FIXTURES
  return SUPEROMNI_FIXTURES;
#else
  return "fixtures";
#endif
}

inline CliResult runCli(const std::string& args) {
  CliResult result;
  std::string cmd = cliPath() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string writeTemp(const std::string& tag, const std::string& content) {
  static int counter = 0;
  std::string path = "/tmp/superomni_test_" + std::to_string(getpid()) + "_" + tag + "_" +
                     std::to_string(counter++) + ".json";
  std::ofstream(path) << content;
  return path;
}

inline std::string writeTemp(const std::string& tag, const superomni::io::json& doc) {
  return writeTemp(tag, doc.dump(2) + "\n");
}

}  // namespace testutil

#endif
