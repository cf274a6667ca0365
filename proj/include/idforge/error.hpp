#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idforge {

enum class ErrorCode {
  DenominatorDivisibleByP,
  DimensionMismatch,
  NotPrime,
  NonUnitConstantTerm,
  CharTwo,
  ConstantTermNotOne,
  NotASimpleRoot,
  PositiveCharacteristic,
  PrecisionExceeded,
  NotOnCurve,
  DenominatorVanishes,
  CrossCheckMismatch,
  NonUnitDenominator,
  InsufficientPrecision,
  PEqualsTwo,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::ParseError,
              "parse error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace idforge
