#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpie {

enum class ErrorCode {
  // numeric domain
  AllZeroInput,
  AllZeroImage,
  NotPowerOfTwo,
  NotUnitNorm,
  NonFiniteValue,
  InvalidAngleList,
  DimensionMismatch,
  EmptyInput,
  // circuit model
  IndexOutOfRange,
  ControlEqualsTarget,
  ControlCollision,
  // image / file formats
  BadMagic,
  MalformedHeader,
  TruncatedData,
  PixelExceedsMaxval,
  MaxvalOutOfRange,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AllZeroInput: return "AllZeroInput";
    case ErrorCode::AllZeroImage: return "AllZeroImage";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidAngleList: return "InvalidAngleList";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ControlEqualsTarget: return "ControlEqualsTarget";
    case ErrorCode::ControlCollision: return "ControlCollision";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedData: return "TruncatedData";
    case ErrorCode::PixelExceedsMaxval: return "PixelExceedsMaxval";
    case ErrorCode::MaxvalOutOfRange: return "MaxvalOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qpie
