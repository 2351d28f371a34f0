#pragma once

// Shared helpers for the test binaries: bundled fixture signatures, data
// paths, and a tiny process runner for exercising the CLI executable.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mvseq/core.hpp"
#include "mvseq/syntax.hpp"

namespace testsupport {

inline std::string data_dir() { return MVSEQ_DATA_DIR; }

inline std::string data_file(const std::string& name) {
  return data_dir() + "/" + name;
}

// Value ids: "0" = 0, "half" = 1, "1" = 2.
inline mvseq::LogicSignature make_godel3() {
  mvseq::Connective imp;
  imp.symbol = "imp";
  imp.arity = 2;
  imp.table = {2, 2, 2, 0, 2, 2, 0, 1, 2};
  return mvseq::LogicSignature("godel3", {"0", "half", "1"}, "0", "1", {imp});
}

inline mvseq::LogicSignature make_classical2() {
  mvseq::Connective neg;
  neg.symbol = "not";
  neg.arity = 1;
  neg.table = {1, 0};
  mvseq::Connective imp;
  imp.symbol = "imp";
  imp.arity = 2;
  imp.table = {1, 1, 0, 1};
  return mvseq::LogicSignature("classical2", {"0", "1"}, "0", "1", {neg, imp});
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the mvseq binary with the given argument string, capturing stdout
// (stderr folded in so error text is observable).
inline RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MVSEQ_BIN) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    r.output.append(buf, n);
  }
  int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) {
    r.exit_code = WEXITSTATUS(status);
  }
  return r;
}

inline std::string read_file(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return "";
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) out.append(buf, n);
  std::fclose(f);
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return;
  std::fwrite(content.data(), 1, content.size(), f);
  std::fclose(f);
}

}  // namespace testsupport
