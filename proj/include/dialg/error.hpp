#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dialg {

enum class ErrorKind {
  Parse,
  Resource,
  ShapeMismatch,
  NonComplex,
  NotAssociative,
  NotDerivation,
  NotSquareZero,
  NotBimodule,
  NotBimoduleMap,
  AxiomFailure,
  NotCocycle,
  NotSection,
  PrecedingTermsNonzero,
  CertificateFailure,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Resource: return "ResourceError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonComplex: return "NonComplex";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDerivation: return "NotDerivation";
    case ErrorKind::NotSquareZero: return "NotSquareZero";
    case ErrorKind::NotBimodule: return "NotBimodule";
    case ErrorKind::NotBimoduleMap: return "NotBimoduleMap";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotSection: return "NotSection";
    case ErrorKind::PrecedingTermsNonzero: return "PrecedingTermsNonzero";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

/// Every failure raised by the engine. The kind is stable and is what the
/// CLI reports; the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace dialg
