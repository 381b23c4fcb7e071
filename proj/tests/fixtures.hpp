#ifndef FREDOMBI_TESTS_FIXTURES_HPP
#define FREDOMBI_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "fredombi/io.hpp"
#include "fredombi/model.hpp"

namespace fredombi::testing {

inline FreInstance example1() {
  return FreInstance::validated(
      {{0.9452, 0.4012, 0.8976, 0.6221, 0.4368, 0.8126},
       {0.5271, 0.1113, 0.2456, 0.3419, 0.5271, 0.2192},
       {0.2073, 0.8172, 0.4386, 0.4599, 0.6152, 0.2188},
       {0.9111, 0.7243, 0.3274, 0.8327, 0.8327, 0.5845}},
      {0.7243, 0.5271, 0.6152, 0.8327}, {0, 0, 0, 0, 0, 0}, 2.0, "example1");
}

inline FreInstance example2() {
  return FreInstance::validated(
      {{0.9452, 0.0, 0.8976, 0.0, 0.0, 0.8126},
       {0.0, 0.0, 0.0, 0.0, 0.5271, 0.0},
       {0.0, 0.8172, 0.0, 0.0, 0.6152, 0.0},
       {0.0, 0.0, 0.0, 0.8327, 0.8327, 0.0}},
      {0.7243, 0.5271, 0.6152, 0.8327},
      {6.2944, 8.1158, -7.4602, 8.2675, 2.6471, -8.0491}, 2.0, "example2");
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FREDOMBI_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace fredombi::testing

#endif
