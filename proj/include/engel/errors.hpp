#pragma once

#include <stdexcept>
#include <string>

namespace engel {

// Base for every error the library raises deliberately. `code()` is a stable
// machine-readable tag; what() carries the human-readable details.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define ENGEL_DEFINE_ERROR(Name)                        \
  class Name : public Error {                           \
   public:                                              \
    explicit Name(const std::string& msg)               \
        : Error(#Name, msg) {}                          \
  }

ENGEL_DEFINE_ERROR(NonPrimeModulus);
ENGEL_DEFINE_ERROR(ReducibleModulusPolynomial);
ENGEL_DEFINE_ERROR(DivisionByZero);
ENGEL_DEFINE_ERROR(SyntaxError);
ENGEL_DEFINE_ERROR(ValueOutOfField);
ENGEL_DEFINE_ERROR(ArityMismatch);
ENGEL_DEFINE_ERROR(WordTooLarge);
ENGEL_DEFINE_ERROR(NotSatisfiedWithinBound);
ENGEL_DEFINE_ERROR(SymbolicBlowup);
ENGEL_DEFINE_ERROR(EnumerationTooLarge);
ENGEL_DEFINE_ERROR(AntisymmetryViolation);
ENGEL_DEFINE_ERROR(JacobiViolation);
ENGEL_DEFINE_ERROR(NotASubalgebra);
ENGEL_DEFINE_ERROR(UnsupportedCharacteristic);
ENGEL_DEFINE_ERROR(OrderExceedsCap);
ENGEL_DEFINE_ERROR(NotSemisimple);
ENGEL_DEFINE_ERROR(NotAnAutomorphism);
ENGEL_DEFINE_ERROR(SequenceNotAutocorrect);
ENGEL_DEFINE_ERROR(SchemaError);
ENGEL_DEFINE_ERROR(ValidationError);
ENGEL_DEFINE_ERROR(BadParams);

#undef ENGEL_DEFINE_ERROR

}  // namespace engel
