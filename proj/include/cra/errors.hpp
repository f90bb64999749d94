#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state set, relation or atom does not belong to the configured model.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Choice over an empty set; the empty choice must be written as Magic.
class EmptyChoice : public Error {
 public:
  EmptyChoice() : Error("empty choice (write top/Magic instead)") {}
};

/// Labels from different event models were mixed.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// An event name that is not part of the declared alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Head normalisation ran past its rewrite budget.
class UnfoldBudgetExceeded : public Error {
 public:
  explicit UnfoldBudgetExceeded(std::size_t budget)
      : Error("head normalisation exceeded rewrite budget of " +
              std::to_string(budget)) {}
};

/// Run configuration outside the supported envelope.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : Error("parse error at " + std::to_string(pos) + ": " + msg),
        pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// Mixed low-precedence operators (`|~|`, `/\`, `&&`) without parentheses.
class AmbiguousPrecedence : public ParseError {
 public:
  AmbiguousPrecedence(std::size_t pos, const std::string& lhs_op,
                      const std::string& rhs_op)
      : ParseError(pos, "ambiguous precedence between '" + lhs_op +
                            "' and '" + rhs_op + "'; add parentheses") {}
};

}  // namespace cra
