#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tvcat {

enum class ErrorKind {
  mismatch,      // operands from different quantales, shapes or categories
  unknown_name,  // builtin lookup failed
  capability,    // operation needs a property the theory or quantale lacks
  cap_exceeded,  // enumeration would exceed a configured cap
  precondition,  // documented precondition violated
  validation,    // structure fails an axiom
  parse,         // malformed literal or document
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tvcat
