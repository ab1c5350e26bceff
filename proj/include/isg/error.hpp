#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isg {

enum class ErrorKind {
  NonAssociative,
  NotInverseSemigroup,
  ZeroViolation,
  IdentityViolation,
  SizeLimit,
  NotDownSet,
  BaseMismatch,
  ConjugationClosureFails,
  NoZero,
  NotHomomorphism,
  NotIdempotentPure,
  DomainMismatch,
  NotAPseudogroup,
  CompatibilityLost,
  PreconditionFailed,
  NucleusAxiomFails,
  NotGenerating,
  NotEtale,
  NotAFrame,
  NotT1Sober,
  NotAGroupoid,
  ParseError,
  ValidationError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the toolkit carries a kind and a human-readable
// witness describing the offending elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + witness), kind_(kind), witness_(witness) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace isg
