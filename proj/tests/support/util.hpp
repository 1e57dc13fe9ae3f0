#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sbg::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
#ifdef SBG_FIXTURE_DIR
  return std::string(SBG_FIXTURE_DIR) + "/" + name;
#else
  return "fixtures/" + name;
#endif
}

}  // namespace sbg::testing
