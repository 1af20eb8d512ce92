#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loopfact {

enum class ErrorCode {
  ZeroConstantTerm,
  NotInvertible,
  ShiftedNotInvertible,
  VanishingSymbol,
  BadNormalization,
  RankDeficient,
  TruncationUnstable,
  PeelDivergence,
  ConsistencyViolation,
  NotFactorizable,
  DenominatorVanishes,
  InvalidIndex,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::ShiftedNotInvertible: return "ShiftedNotInvertible";
    case ErrorCode::VanishingSymbol: return "VanishingSymbol";
    case ErrorCode::BadNormalization: return "BadNormalization";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TruncationUnstable: return "TruncationUnstable";
    case ErrorCode::PeelDivergence: return "PeelDivergence";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::NotFactorizable: return "NotFactorizable";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Short %g rendering for error messages.
inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

/// Domain error raised by the factorization engine. `gate()` names the
/// failing invertibility gate ("A" or "A1") for the factorization errors and
/// is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::string gate = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        gate_(std::move(gate)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& gate() const noexcept { return gate_; }

 private:
  ErrorCode code_;
  std::string gate_;
};

}  // namespace loopfact
