#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charsum {

enum class Errc {
  NonPrimeP,
  EvenCharacteristic,
  DegreeUnsupported,
  DivisionByZero,
  NotInSubfield,
  ZeroArgument,
  NotRationalInteger,
  IndexOutOfRange,
  BothCoefficientsZero,
  WrongCase,
  NoSolution,
  ZeroC,
  ZeroB,
  PeriodMismatch,
  BoundViolation,
  RootCountViolation,
  OracleMismatch,
  Overflow,
  ParseError,
  GuardExceeded,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::DegreeUnsupported: return "DegreeUnsupported";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::NotRationalInteger: return "NotRationalInteger";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BothCoefficientsZero: return "BothCoefficientsZero";
    case Errc::WrongCase: return "WrongCase";
    case Errc::NoSolution: return "NoSolution";
    case Errc::ZeroC: return "ZeroC";
    case Errc::ZeroB: return "ZeroB";
    case Errc::PeriodMismatch: return "PeriodMismatch";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::RootCountViolation: return "RootCountViolation";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
    case Errc::GuardExceeded: return "GuardExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the `Errc` codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace charsum
