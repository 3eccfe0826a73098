#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shortcode {

enum class ErrorCode {
  RejectsReducibleModulus,
  RejectsNonPrimeP,
  MalformedFieldSpec,
  InversionOfZero,
  UndefinedForEvenCharacteristic,
  ZeroInput,
  CubesAreAllOfGFq,
  NonUniqueSolution,
  IndexOutOfRange,
  CapExceeded,
  BudgetExceeded,
  SingularSystem,
  InconsistentMoments,
  GateUnsatisfied,
  NegativeCount,
  NonIntegralCount,
  MassMismatch,
  NotBent,
  DualNonzero,
  SubfieldAbsent,
  DegenerateT,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RejectsReducibleModulus: return "RejectsReducibleModulus";
    case ErrorCode::RejectsNonPrimeP: return "RejectsNonPrimeP";
    case ErrorCode::MalformedFieldSpec: return "MalformedFieldSpec";
    case ErrorCode::InversionOfZero: return "InversionOfZero";
    case ErrorCode::UndefinedForEvenCharacteristic: return "UndefinedForEvenCharacteristic";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::CubesAreAllOfGFq: return "CubesAreAllOfGFq";
    case ErrorCode::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InconsistentMoments: return "InconsistentMoments";
    case ErrorCode::GateUnsatisfied: return "GateUnsatisfied";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::NonIntegralCount: return "NonIntegralCount";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::NotBent: return "NotBent";
    case ErrorCode::DualNonzero: return "DualNonzero";
    case ErrorCode::SubfieldAbsent: return "SubfieldAbsent";
    case ErrorCode::DegenerateT: return "DegenerateT";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shortcode
