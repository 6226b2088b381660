#pragma once

#include <stdexcept>
#include <string>

namespace nss {

// Error taxonomy mirrored by the CLI exit codes:
//   invalid_input        -> 1   (bad files, bad colors, malformed words, violated invariants)
//   not_computable       -> 2   (no Kirby coloring / no renormalizable component)
//   resource_exhausted   -> 3   (contraction width or expansion term guard)
enum class ErrorKind { invalid_input, not_computable, resource_exhausted };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw Error(ErrorKind::invalid_input, msg);
}
[[noreturn]] inline void fail_not_computable(const std::string& msg) {
  throw Error(ErrorKind::not_computable, msg);
}
[[noreturn]] inline void fail_resource(const std::string& msg) {
  throw Error(ErrorKind::resource_exhausted, msg);
}

}  // namespace nss
