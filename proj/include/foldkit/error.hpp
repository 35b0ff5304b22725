#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foldkit {

enum class ErrorKind {
  FieldMismatch,
  DimensionMismatch,
  InvalidInput,
  NotAcyclic,
  NonIntegralFold,
  MixedOrientation,
  InvalidTriple,
  DegreeCapExceeded,
  DimensionCapExceeded,
  CapExceeded,
  RelationNotPreserved,
  ParentMismatch,
  UnknownLabel,
  NonCommutingFactors,
  NotReduced,
  ActionInvalid,
  NotInvariant,
  HypothesisViolated,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::NonIntegralFold: return "NonIntegralFold";
    case ErrorKind::MixedOrientation: return "MixedOrientation";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::RelationNotPreserved: return "RelationNotPreserved";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NonCommutingFactors: return "NonCommutingFactors";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::ActionInvalid: return "ActionInvalid";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` carries the error class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the cap family (degree, dimension, element caps).
  bool is_cap() const noexcept {
    return kind_ == ErrorKind::DegreeCapExceeded || kind_ == ErrorKind::DimensionCapExceeded ||
           kind_ == ErrorKind::CapExceeded;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace foldkit
