#ifndef COXETER_ERRORS_HPP
#define COXETER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxeter {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate bond matrix breaks one of the Coxeter matrix axioms.
/// Carries the offending generator pair.
class InvalidCoxeterMatrix : public Error {
 public:
  InvalidCoxeterMatrix(const std::string& what, int first, int second)
      : Error(what), first_(first), second_(second) {}
  int first() const { return first_; }
  int second() const { return second_; }

 private:
  int first_;
  int second_;
};

/// Bad caller input that is not a text-parse problem (generator out of
/// range, rank too large, catalog parameter out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A root-orbit vector could not be classified as positive or negative
/// within the sign tolerance.
class DegenerateSign : public Error {
 public:
  using Error::Error;
};

/// A normal form would exceed the configured length cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A verifier was called on an instance outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The join was requested but the universe holds no common upper bound.
class NoUpperBound : public Error {
 public:
  using Error::Error;
};

/// Upper bounds exist but none of them lies below all the others.
class NoLeastUpperBound : public Error {
 public:
  using Error::Error;
};

/// The requested oracle model does not exist for this system.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxeter

#endif  // COXETER_ERRORS_HPP
