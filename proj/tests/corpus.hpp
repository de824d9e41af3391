#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "arcext/surface.hpp"

#ifndef ARCEXT_TEST_DATA_DIR
#define ARCEXT_TEST_DATA_DIR "tests/data"
#endif

namespace corpus {

inline std::string read_file(const std::string& name) {
  std::string path = std::string(ARCEXT_TEST_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing test data: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline arcext::Surface load(const std::string& name) {
  return arcext::Surface::load(read_file(name));
}

inline arcext::Surface qstar() { return load("qstar.json"); }
inline arcext::Surface quad() { return load("quad.json"); }
inline arcext::Surface pentagon() { return load("pentagon.json"); }
inline arcext::Surface hexagon() { return load("hexagon.json"); }
inline arcext::Surface heptagon() { return load("heptagon.json"); }
inline arcext::Surface octagon() { return load("octagon.json"); }
inline arcext::Surface annulus21() { return load("annulus21.json"); }
inline arcext::Surface annulus22() { return load("annulus22.json"); }

}  // namespace corpus
