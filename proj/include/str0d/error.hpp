#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace str0d {

enum class ErrorKind {
  NotPoset,
  NotLattice,
  NotDistributive,
  BoundExceeded,
  NotHomomorphism,
  NotCongruence,
  PartNotSubframe,
  PartsDoNotGenerate,
  NotStr0d,
  NotDense,
  NotT0,
  InvalidInput,
  // The remaining kinds signal a broken theorem or an internal bug. They
  // should never be raised on valid input.
  UniversalPropertyViolation,
  ConditionDisagreement,
  TheoremViolation,
  RemarkViolation,
  OracleDisagreement,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPoset: return "NotPoset";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotCongruence: return "NotCongruence";
    case ErrorKind::PartNotSubframe: return "PartNotSubframe";
    case ErrorKind::PartsDoNotGenerate: return "PartsDoNotGenerate";
    case ErrorKind::NotStr0d: return "NotStr0d";
    case ErrorKind::NotDense: return "NotDense";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UniversalPropertyViolation: return "UniversalPropertyViolation";
    case ErrorKind::ConditionDisagreement: return "ConditionDisagreement";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::RemarkViolation: return "RemarkViolation";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind and
/// a human diagnostic naming the offending elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace str0d
