#ifndef PBWGB_ERROR_HH
#define PBWGB_ERROR_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbwgb {

// Input text could not be tokenized or parsed. `pos` is a byte offset into
// the offending text.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// A mathematical precondition failed: non-admissible order, zero q, bad
// field discriminant, dimension mismatch, and the like.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded (rewrite step budget). Turns a
// would-be hang into a hard error.
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic failure: inverse of zero, leading term of zero, etc.
struct math_error : std::runtime_error {
  explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pbwgb

#endif
