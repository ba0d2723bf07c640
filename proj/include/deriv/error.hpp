#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deriv {

enum class ErrorKind {
  ArityMismatch,
  DuplicateRuleName,
  ResourceLimit,
  SyntaxError,
  DecodeError,
  IllFormed,
  NoMatchingBinder,
  UnboundVariable,
  UnknownState,
  UnknownLetter,
  MalformedChain,
  InvalidAutomaton,
};

const char* to_string(ErrorKind kind);

// Errors that are not tied to a node of a tree being checked. Node-local
// failures are reported as a Rejection instead (see outcome.hpp).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace deriv
