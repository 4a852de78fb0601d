#ifndef PBWGB_TESTS_CORPUS_HH
#define PBWGB_TESTS_CORPUS_HH

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

inline std::string corpus_path(const std::string& name) {
#ifdef PBWGB_CORPUS_DIR
  return std::string(PBWGB_CORPUS_DIR) + "/" + name;
#else
  return "corpus/" + name;
#endif
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string corpus(const std::string& name) { return slurp(corpus_path(name)); }

}  // namespace testsupport

#endif
