#pragma once

#include <stdexcept>
#include <string>

namespace spinlift {

enum class ErrorCode {
  ZeroInverse,
  ZeroInput,
  ZeroParameter,
  FieldMismatch,
  RankMismatch,
  SingularMatrix,
  NotAUnit,
  IsotropicVector,
  NotIsotropicPair,
  BadPairing,
  EqualIndices,
  IndicesNotDistinct,
  IndexOutOfRange,
  NeedRankAtLeast2,
  NeedRankAtLeast3,
  NonSquareDeterminant,
  NotEven,
  NotALeviLift,
  DecompositionFails,
  NormIdentityFails,
  ParseError,
  UnsupportedField,
  RankBoundExceeded,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinlift
