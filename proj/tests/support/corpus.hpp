#pragma once

// Polynomial corpora stored as expression files: one polynomial per line,
// blank lines and lines starting with '#' ignored.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "absirr/parse.hpp"

namespace absirr::testing {

inline std::vector<std::string> read_corpus(const std::string& name) {
  const std::string path = std::string(ABSIRR_TEST_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

}  // namespace absirr::testing
