#ifndef TEAMAUT_TESTS_FIXTURE_HPP
#define TEAMAUT_TESTS_FIXTURE_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "teamaut/parser.hpp"

namespace teamaut::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ModelDocument load(const std::string& name) {
  return parse(read_fixture(name));
}

}  // namespace teamaut::testing

#endif
