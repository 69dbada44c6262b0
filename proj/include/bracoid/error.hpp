#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bracoid {

enum class ErrorKind {
  InvalidParameter,
  Shape,
  IndexOutOfRange,
  DuplicateElementName,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  OrderCapExceeded,
  IdentityLawViolated,
  CompatibilityViolated,
  NotTransitive,
  Eq1Violated,
  Eq2Violated,
  Eq4Violated,
  Eq6Violated,
  SharedNMismatch,
  CarrierMismatch,
  DivisibilityViolated,
  WellDefinednessViolated,
  NotTwoSidedBrace,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateElementName: return "DuplicateElementName";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::IdentityLawViolated: return "IdentityLawViolated";
    case ErrorKind::CompatibilityViolated: return "CompatibilityViolated";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::Eq1Violated: return "Eq1Violated";
    case ErrorKind::Eq2Violated: return "Eq2Violated";
    case ErrorKind::Eq4Violated: return "Eq4Violated";
    case ErrorKind::Eq6Violated: return "Eq6Violated";
    case ErrorKind::SharedNMismatch: return "SharedNMismatch";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::WellDefinednessViolated: return "WellDefinednessViolated";
    case ErrorKind::NotTwoSidedBrace: return "NotTwoSidedBrace";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

/// A first counterexample, as "name=value" strings in canonical element names.
using WitnessList = std::vector<std::string>;

/// Violation of a structural law, located at its first failing tuple.
struct Violation {
  ErrorKind kind;
  WitnessList witness;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, WitnessList witness = {})
      : std::runtime_error(compose(kind, message, witness)),
        kind_(kind),
        witness_(std::move(witness)) {}

  explicit Error(const Violation& v, const std::string& message = "")
      : Error(v.kind, message, v.witness) {}

  ErrorKind kind() const noexcept { return kind_; }
  const WitnessList& witness() const noexcept { return witness_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& message,
                             const WitnessList& witness) {
    std::string out(to_string(kind));
    if (!message.empty()) {
      out += ": ";
      out += message;
    }
    if (!witness.empty()) {
      out += " [";
      for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i != 0) out += ", ";
        out += witness[i];
      }
      out += "]";
    }
    return out;
  }

  ErrorKind kind_;
  WitnessList witness_;
};

}  // namespace bracoid
