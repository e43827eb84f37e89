#ifndef KMQ_ERROR_HPP
#define KMQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kmq {

/// Base class of every error raised by the library. `origin()` names the
/// module and operation that failed ("qpairing/gram_block", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string origin, const std::string& what)
      : std::runtime_error(what), origin_(std::move(origin)) {}
  const std::string& origin() const noexcept { return origin_; }

 private:
  std::string origin_;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(std::string origin)
      : Error(std::move(origin), "division by zero") {}
};

/// The session denominator D is too coarse for a requested exponent.
class DenominatorError : public Error {
 public:
  using Error::Error;
};

class NotSymmetrizable : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (e.g. Serre relations for a
/// matrix that is not a generalized Cartan matrix).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Degree cap or truncation depth exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation hit a zero of a denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A result contradicting a proven structural fact; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("cli/parse_config", "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Path integration refused or failed.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace kmq

#endif  // KMQ_ERROR_HPP
