#pragma once

#include <stdexcept>
#include <string>

namespace nzc {

// Every failure the library raises derives from Error so the CLI can map
// kinds onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompleteAssignment : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("cycle cap exceeded (" + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  NotDecomposable(std::string what, std::string witness)
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// A construction invariant did not hold. Indicates a bug or a gap in the
/// construction on this instance; `witness` carries a JSON fragment.
class StructuralError : public Error {
 public:
  StructuralError(std::string what, std::string witness = {})
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string what, std::string witness = {})
      : Error(std::move(what)), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nzc
