#include "torbiv/error.hpp"

namespace torbiv {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::NotSquare: return "NotSquare";
  case ErrorCode::NotUnimodular: return "NotUnimodular";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::InvalidCone: return "InvalidCone";
  case ErrorCode::NotSmooth: return "NotSmooth";
  case ErrorCode::NotFullDimensional: return "NotFullDimensional";
  case ErrorCode::InvalidFan: return "InvalidFan";
  case ErrorCode::UnknownName: return "UnknownName";
  case ErrorCode::BadParams: return "BadParams";
  case ErrorCode::NoContainingMaxCone: return "NoContainingMaxCone";
  case ErrorCode::ConeNotInFan: return "ConeNotInFan";
  case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
  case ErrorCode::DiagonalEntry: return "DiagonalEntry";
  case ErrorCode::NoBaseChart: return "NoBaseChart";
  case ErrorCode::NotRegular: return "NotRegular";
  case ErrorCode::UndefinedEntry: return "UndefinedEntry";
  case ErrorCode::ZeroBivector: return "ZeroBivector";
  case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  case ErrorCode::BadBound: return "BadBound";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
      code_(code) {}

} // namespace torbiv
