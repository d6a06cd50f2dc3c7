#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidwb {

enum class ErrorCode {
  InvalidStrandCount,
  LetterOutOfRange,
  StrandMismatch,
  RankMismatch,
  EmptyFactorization,
  UnverifiedFactorization,
  NegativeGenus,
  IndexOutOfRange,
  BoundExceeded,
  ZeroBudget,
  NotApplicable,
  DegenerateDegree,
  InvalidArgument,
  Parse,
  RhoOutOfRange,
};

/// Stable identifier for an error code ("StrandMismatch", ...).
const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// A diagnostic from one of the line-oriented text formats. Positions are
/// 1-based; column points at the offending token.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string &message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string &message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

} // namespace braidwb
