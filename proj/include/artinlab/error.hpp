#pragma once

#include <stdexcept>
#include <string>

namespace artinlab {

/// Failure classes surfaced to callers. The CLI maps each to a fixed exit code.
enum class ErrorKind {
  Parse,
  InfiniteDimensional,
  IrrationalPoints,
  NonIsolated,
  InvariantViolation,
  InvalidArgument,
  Cancelled,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InvalidArgument, what);
}

inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InvariantViolation, what);
}

}  // namespace artinlab
