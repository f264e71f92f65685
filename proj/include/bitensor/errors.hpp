#ifndef BITENSOR_ERRORS_HPP
#define BITENSOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitensor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class LetterOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotWordSupported : public Error {
 public:
  using Error::Error;
};

class UnknownBasisPhrase : public Error {
 public:
  using Error::Error;
};

class EmptyPhrase : public Error {
 public:
  using Error::Error;
};

class CardinalMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when a constructed element fails the primitivity test. This is an
// internal consistency failure, never a user input error.
class PrimitivityViolation : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bitensor

#endif  // BITENSOR_ERRORS_HPP
