#pragma once
#include <stdexcept>
#include <string>

namespace nsep {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define NSEP_ERROR_TYPE(NAME)                                   \
  struct NAME : Error {                                         \
    explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
  }

// ffield
NSEP_ERROR_TYPE(NotPrime);
NSEP_ERROR_TYPE(OrderUnavailable);
NSEP_ERROR_TYPE(SearchExhausted);

// mpoly
NSEP_ERROR_TYPE(ContextMismatch);
NSEP_ERROR_TYPE(DimensionMismatch);
NSEP_ERROR_TYPE(NonHomogeneous);
NSEP_ERROR_TYPE(ParseError);

// grp
NSEP_ERROR_TYPE(NotInvertible);
NSEP_ERROR_TYPE(ClosureCapExceeded);
NSEP_ERROR_TYPE(ModularCharacteristic);
NSEP_ERROR_TYPE(GeneratorCountMismatch);
NSEP_ERROR_TYPE(NotNormal);
NSEP_ERROR_TYPE(NotRepresentation);

// septool
NSEP_ERROR_TYPE(CapExceeded);
NSEP_ERROR_TYPE(OrbitCollision);
NSEP_ERROR_TYPE(ClaimMismatch);
NSEP_ERROR_TYPE(IrreducibleListUnverified);
NSEP_ERROR_TYPE(NotSeparated);

// catalog
NSEP_ERROR_TYPE(UnknownGroup);
NSEP_ERROR_TYPE(RootUnavailable);
NSEP_ERROR_TYPE(BadParameter);

#undef NSEP_ERROR_TYPE

}  // namespace nsep
