#pragma once

#include <stdexcept>
#include <string>

namespace qsl {

enum class ErrorCode {
  invalid_argument,
  zero_norm,
  zero_dispersion,
  nonpositive_dispersion,
  missing_lower_bound,
  degenerate_spectrum,
  minorant_violation,
  tail_uncertifiable,
  slack_violation,
  domain_mismatch,
  validation,
};

/// Library error carrying a machine-readable code next to the message.
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

}  // namespace qsl
