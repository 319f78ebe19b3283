#pragma once

#include <stdexcept>
#include <string>

namespace hgpf {

enum class ErrorCode {
  EndpointRoot,
  NotInDomain,
  DegenerateShift,
  DegenerateReciprocal,
  DenominatorSurvives,
  DegreeDrop,
  IrrationalShift,
  EmptyRootSet,
  UnsupportedRegion,
  InvariantViolation,
  Disagreement,
  NonPositiveC,
  ComplementFailure,
  ConventionFailure,
  PoleProximity,
  ZeroDivisor,
  Parse,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EndpointRoot: return "EndpointRoot";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::DegenerateShift: return "DegenerateShift";
    case ErrorCode::DegenerateReciprocal: return "DegenerateReciprocal";
    case ErrorCode::DenominatorSurvives: return "DenominatorSurvives";
    case ErrorCode::DegreeDrop: return "DegreeDrop";
    case ErrorCode::IrrationalShift: return "IrrationalShift";
    case ErrorCode::EmptyRootSet: return "EmptyRootSet";
    case ErrorCode::UnsupportedRegion: return "UnsupportedRegion";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Disagreement: return "Disagreement";
    case ErrorCode::NonPositiveC: return "NonPositiveC";
    case ErrorCode::ComplementFailure: return "ComplementFailure";
    case ErrorCode::ConventionFailure: return "ConventionFailure";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hgpf
