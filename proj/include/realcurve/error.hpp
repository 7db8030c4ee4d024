#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realcurve {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        reason_(msg),
        position_(position) {}
  std::size_t position() const { return position_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  std::size_t position_;
};

/// Curve input violating squarefreeness, coprimality or factor consistency.
class InvalidCurve : public Error {
 public:
  using Error::Error;
};

/// A fraction whose denominator vanishes identically on a component.
class NotInFunctionField : public Error {
 public:
  using Error::Error;
};

/// A polynomial system expected to be zero-dimensional shares a component.
class PositiveDimensional : public Error {
 public:
  using Error::Error;
};

/// Local analysis requested at a point whose coordinates are not supported.
class UnsupportedCenter : public Error {
 public:
  using Error::Error;
};

/// Branch coefficients would need a field beyond a single quadratic extension.
class UnsupportedExtension : public Error {
 public:
  using Error::Error;
};

/// Series truncation ceiling reached before an order could be certified.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Unreadable or malformed manifest file.
class ManifestError : public Error {
 public:
  using Error::Error;
};

}  // namespace realcurve
