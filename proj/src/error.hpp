#pragma once

#include <stdexcept>
#include <string>

namespace bce {

// Error categories, mirrored by the C API status codes.
enum class ErrorKind {
  InvalidInput,   // malformed config, shape mismatch, bad scalar text
  CapExceeded,    // an operation needs degrees beyond the configured cap
  Unsupported,    // construction refused (e.g. truncated algebra for spinors)
  Internal        // a violated invariant; always a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, msg);
}
[[noreturn]] inline void throw_cap(const std::string& msg) {
  throw Error(ErrorKind::CapExceeded, msg);
}
[[noreturn]] inline void throw_unsupported(const std::string& msg) {
  throw Error(ErrorKind::Unsupported, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
  throw Error(ErrorKind::Internal, msg);
}

}  // namespace bce
