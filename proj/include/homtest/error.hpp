#pragma once

#include <stdexcept>
#include <string>

namespace homtest {

enum class Errc {
  invalid_argument = 1,
  io = 2,
  parse = 3,
  limit = 4,
  numeric = 5,
  mismatch = 6,
};

// Every failure in the core surfaces as an Error; the C layer maps the code
// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace homtest
