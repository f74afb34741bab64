#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heron {

/// Machine-readable failure categories. Every library error carries one.
enum class ErrorCode {
  division_by_zero,
  negative_sqrt,
  parse,
  pole,           // a parametrization denominator vanishes
  degenerate,     // input lies on a degenerate configuration
  range,          // parameter outside its open domain
  out_of_domain,  // angle outside (0, pi)
  not_in_family,
  not_heron,
  invalid_input,  // fields are mutually inconsistent
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace heron
