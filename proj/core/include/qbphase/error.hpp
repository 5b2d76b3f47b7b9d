#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbphase {

enum class ErrorKind {
  InvalidState,
  NullState,
  Domain,
  NoConvergence,
  Overflow,
  CutoffTooSmall,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. `kind()` is what the CLI maps
/// to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidStateError : public Error {
 public:
  explicit InvalidStateError(const std::string& what)
      : Error(ErrorKind::InvalidState, what) {}
};

/// The requested superposition is the zero vector (or numerically so).
class NullStateError : public Error {
 public:
  explicit NullStateError(const std::string& what)
      : Error(ErrorKind::NullState, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(const std::string& what)
      : Error(ErrorKind::NoConvergence, what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorKind::Overflow, what) {}
};

class CutoffTooSmallError : public Error {
 public:
  explicit CutoffTooSmallError(const std::string& what)
      : Error(ErrorKind::CutoffTooSmall, what) {}
};

}  // namespace qbphase
