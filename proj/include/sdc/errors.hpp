#ifndef SDC_ERRORS_HPP
#define SDC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdc {

/// Base of every domain error. kind() is the stable name used in CLI error JSON.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define SDC_DECLARE_ERROR(Name)                                              \
    class Name : public Error {                                              \
    public:                                                                  \
        using Error::Error;                                                  \
        const char* kind() const noexcept override { return #Name; }         \
    }

SDC_DECLARE_ERROR(InvalidInput);
SDC_DECLARE_ERROR(NonNumericalError);
SDC_DECLARE_ERROR(OverflowError);
SDC_DECLARE_ERROR(GluingHypothesisError);
SDC_DECLARE_ERROR(PreconditionError);
SDC_DECLARE_ERROR(ConstructionVerificationError);
SDC_DECLARE_ERROR(NotFatTree);
SDC_DECLARE_ERROR(NotFatForest);
SDC_DECLARE_ERROR(RetryExhausted);

#undef SDC_DECLARE_ERROR

}  // namespace sdc

#endif
