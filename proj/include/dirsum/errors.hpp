#pragma once

#include <stdexcept>
#include <string>

namespace dirsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DIRSUM_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

DIRSUM_DEFINE_ERROR(InvalidArgument);
DIRSUM_DEFINE_ERROR(RangeError);
DIRSUM_DEFINE_ERROR(DuplicatePoints);
DIRSUM_DEFINE_ERROR(SingularSystem);
DIRSUM_DEFINE_ERROR(VariantMismatch);
DIRSUM_DEFINE_ERROR(ScanTooSmall);
DIRSUM_DEFINE_ERROR(InvalidSupport);
DIRSUM_DEFINE_ERROR(OutsideDisk);
DIRSUM_DEFINE_ERROR(NonConvergent);
DIRSUM_DEFINE_ERROR(ParseError);
// A post-condition the library checks on its own output did not hold.
DIRSUM_DEFINE_ERROR(InvariantViolation);

#undef DIRSUM_DEFINE_ERROR

}  // namespace dirsum
