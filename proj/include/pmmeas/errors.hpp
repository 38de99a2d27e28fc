#ifndef PMMEAS_ERRORS_HPP
#define PMMEAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pmmeas {

// Base class for all contract violations raised by this library.  The code()
// string is stable and machine-checkable; what() carries context.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define PMMEAS_DEFINE_ERROR(Name)                                     \
  struct Name : Error {                                               \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}      \
  }

PMMEAS_DEFINE_ERROR(NonNormalized);
PMMEAS_DEFINE_ERROR(NegativeLocation);
PMMEAS_DEFINE_ERROR(NegativeMass);
PMMEAS_DEFINE_ERROR(BadGrid);
PMMEAS_DEFINE_ERROR(OutOfUnitInterval);
PMMEAS_DEFINE_ERROR(NegativeInput);
PMMEAS_DEFINE_ERROR(NonLeftContinuousScalar);
PMMEAS_DEFINE_ERROR(BadDescriptor);
PMMEAS_DEFINE_ERROR(NotLDecomposable);
PMMEAS_DEFINE_ERROR(InputNotMeasure);
PMMEAS_DEFINE_ERROR(NotDistributive);
PMMEAS_DEFINE_ERROR(DominanceUnverified);
PMMEAS_DEFINE_ERROR(InputNotAntimonotoneSubmeasure);
PMMEAS_DEFINE_ERROR(PointSetMismatch);
PMMEAS_DEFINE_ERROR(ProductTooLarge);
PMMEAS_DEFINE_ERROR(EmptySet);
PMMEAS_DEFINE_ERROR(NotProbBounded);
PMMEAS_DEFINE_ERROR(ConfigParse);
PMMEAS_DEFINE_ERROR(SuiteUnknown);
PMMEAS_DEFINE_ERROR(IoFailure);
PMMEAS_DEFINE_ERROR(BudgetExhausted);

#undef PMMEAS_DEFINE_ERROR

}  // namespace pmmeas

#endif
