#pragma once

#include <stdexcept>
#include <string>

namespace qo {

// Error codes shared across modules. Every throw carries one so the CLI can
// map failures onto its exit-code contract.
enum class ErrorCode {
  ArithmeticOverflow,
  NegativeExponent,
  MalformedExponent,
  DuplicateMonomial,
  ZeroCoefficient,
  ParseError,
  NotAGraph,
  BadTranslation,
  TailTooLarge,
  NotLaurentMonomialChart,
  NoDominantTerm,
  NewtonDiverged,
  CapExhausted,
  TruncationExhausted,
  NormalFormRequired,
  NoAdmissibleCenter,
  RuleGap,
  NoConvergence,
  DepthExceeded,
  NonTrivialStart,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::MalformedExponent: return "MalformedExponent";
    case ErrorCode::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::BadTranslation: return "BadTranslation";
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::NotLaurentMonomialChart: return "NotLaurentMonomialChart";
    case ErrorCode::NoDominantTerm: return "NoDominantTerm";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::CapExhausted: return "CapExhausted";
    case ErrorCode::TruncationExhausted: return "TruncationExhausted";
    case ErrorCode::NormalFormRequired: return "NormalFormRequired";
    case ErrorCode::NoAdmissibleCenter: return "NoAdmissibleCenter";
    case ErrorCode::RuleGap: return "RuleGap";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::NonTrivialStart: return "NonTrivialStart";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace qo
