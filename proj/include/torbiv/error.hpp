#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torbiv {

enum class ErrorCode {
  NotSquare,
  NotUnimodular,
  DimensionMismatch,
  InvalidCone,
  NotSmooth,
  NotFullDimensional,
  InvalidFan,
  UnknownName,
  BadParams,
  NoContainingMaxCone,
  ConeNotInFan,
  NotAntisymmetric,
  DiagonalEntry,
  NoBaseChart,
  NotRegular,
  UndefinedEntry,
  ZeroBivector,
  OracleDisagreement,
  BadBound,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace torbiv
