#pragma once

// Runs the command-line tool and reads back its two output modes.

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "test_support.hpp"

namespace braidwb::testing::cli {

using nlohmann::json;

struct Run {
  int exit = -1;
  std::string out;
  std::string err;
};

inline std::filesystem::path scratch() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("braidwb_cli_" + std::to_string(getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline Run run(const std::string &args) {
  const auto err_path = scratch() / "stderr.txt";
  const std::string cmd =
      std::string(BRAIDWB_CLI_PATH) + " " + args + " 2>" + err_path.string();
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr)
    throw std::runtime_error("cannot start " + cmd);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = read_file(err_path.string());
  return r;
}

inline std::string scalar(const json &v) {
  if (v.is_null())
    return "none";
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

// Expected text lines for a structured document.
inline void flatten(const json &doc, const std::string &prefix, std::map<std::string, std::string> &out) {
  for (const auto &[key, value] : doc.items()) {
    if (value.is_object()) {
      flatten(value, prefix + key + ".", out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i)
        flatten(value[i], prefix + key + "." + std::to_string(i) + ".", out);
    } else if (value.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < value.size(); ++i)
        joined += (i ? "; " : "") + scalar(value[i]);
      out[prefix + key] = joined;
    } else {
      out[prefix + key] = scalar(value);
    }
  }
}

inline std::map<std::string, std::string> parse_text(const std::string &text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    const std::string line = text.substr(start, end - start);
    const auto colon = line.find(": ");
    if (colon == std::string::npos)
      throw std::runtime_error("not a 'key: value' line: " + line);
    out[line.substr(0, colon)] = line.substr(colon + 2);
    start = end == std::string::npos ? text.size() : end + 1;
  }
  return out;
}

inline std::map<std::string, std::string> text_fields(const std::string &args) {
  return parse_text(run(args).out);
}

} // namespace braidwb::testing::cli
