#ifndef CYCERT_TESTS_SUBPROCESS_HPP
#define CYCERT_TESTS_SUBPROCESS_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace testutil {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// run a shell command, capture stdout and the exit code
inline RunResult run(const std::string& cmd) {
  RunResult res;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

inline std::string read_file(const std::string& path) {
  FILE* f = fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
    out.append(buf.data(), n);
  fclose(f);
  return out;
}

}  // namespace testutil

#endif
