#pragma once

#include <stdexcept>
#include <string>

namespace prx {

enum class errc {
  invalid_argument,
  duplicate_arc,
  out_of_range,
  parse,
  alpha1_invalid,
  numeric,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace prx
