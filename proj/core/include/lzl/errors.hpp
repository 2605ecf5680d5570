#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lzl {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally invalid input (disconnected graph, bad schedule, bad certificate...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An input exceeds a configured engine cap.
class SizeError : public Error {
 public:
  SizeError(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what + ": " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// A strategy or operation was applied outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A policy produced an illegal move (e.g. more probes than its budget).
class PolicyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A generated strategy failed its own mechanical verification.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lzl
