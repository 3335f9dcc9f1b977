#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BRAIDKIT_DEFINE_ERROR(Name)   \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

BRAIDKIT_DEFINE_ERROR(FieldMismatch);
BRAIDKIT_DEFINE_ERROR(NotPrime);
BRAIDKIT_DEFINE_ERROR(ParseError);
BRAIDKIT_DEFINE_ERROR(ShapeError);
BRAIDKIT_DEFINE_ERROR(NotInvertible);
BRAIDKIT_DEFINE_ERROR(SpecViolation);
BRAIDKIT_DEFINE_ERROR(BadTruncation);
BRAIDKIT_DEFINE_ERROR(TruncationOverflow);
BRAIDKIT_DEFINE_ERROR(BadDegree);
BRAIDKIT_DEFINE_ERROR(NotClosedUnderBraiding);
BRAIDKIT_DEFINE_ERROR(NotAMorphism);
BRAIDKIT_DEFINE_ERROR(NoFactorization);
BRAIDKIT_DEFINE_ERROR(InternalInconsistency);

#undef BRAIDKIT_DEFINE_ERROR

}  // namespace braidkit
