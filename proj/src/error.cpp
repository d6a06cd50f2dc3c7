#include "braidwb/error.hpp"

namespace braidwb {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidStrandCount: return "InvalidStrandCount";
  case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
  case ErrorCode::StrandMismatch: return "StrandMismatch";
  case ErrorCode::RankMismatch: return "RankMismatch";
  case ErrorCode::EmptyFactorization: return "EmptyFactorization";
  case ErrorCode::UnverifiedFactorization: return "UnverifiedFactorization";
  case ErrorCode::NegativeGenus: return "NegativeGenus";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::BoundExceeded: return "BoundExceeded";
  case ErrorCode::ZeroBudget: return "ZeroBudget";
  case ErrorCode::NotApplicable: return "NotApplicable";
  case ErrorCode::DegenerateDegree: return "DegenerateDegree";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::Parse: return "ParseError";
  case ErrorCode::RhoOutOfRange: return "RhoOutOfRange";
  }
  return "Unknown";
}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string &message)
    : Error(code, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message) {}

} // namespace braidwb
