#pragma once

#include <stdexcept>
#include <string>

namespace patrep {

/// Coarse classification used by the CLI to pick an exit code.
enum class ErrorKind {
  InvalidInput,   // malformed or out-of-domain input
  ResourceLimit,  // a configured enumeration cap would be exceeded
  Finding,        // a verification-level failure worth reporting
  Internal,       // an invariant the library itself guarantees was broken
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(name) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

#define PATREP_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(Kind, #Name, what) {} \
  };

PATREP_DEFINE_ERROR(InvalidInput, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(InvalidRoot, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(DimensionError, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(StructureError, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(DivisionByZero, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(CharacteristicError, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(NotACharacter, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(NotNormalized, ErrorKind::InvalidInput)
PATREP_DEFINE_ERROR(ResourceLimit, ErrorKind::ResourceLimit)
PATREP_DEFINE_ERROR(ConstructionFailed, ErrorKind::Finding)
PATREP_DEFINE_ERROR(ProofCaseViolation, ErrorKind::Finding)
PATREP_DEFINE_ERROR(AssumptionViolated, ErrorKind::Finding)
PATREP_DEFINE_ERROR(InternalInvariantViolation, ErrorKind::Internal)

#undef PATREP_DEFINE_ERROR

}  // namespace patrep
