#ifndef CMV_ERRORS_HPP
#define CMV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionTooLow : Error {
    using Error::Error;
};
struct NotSquarefree : Error {
    using Error::Error;
};
struct NotFundamental : Error {
    using Error::Error;
};
struct DiscriminantMismatch : Error {
    using Error::Error;
};
struct NonPrincipal : Error {
    using Error::Error;
};
struct ZeroElement : Error {
    using Error::Error;
};
struct NotUpperHalfPlane : Error {
    using Error::Error;
};
struct NotPositivelyOriented : Error {
    using Error::Error;
};
struct GroupMismatch : Error {
    using Error::Error;
};
struct DependentRows : Error {
    using Error::Error;
};
struct NoRelationFound : Error {
    using Error::Error;
};
struct RecognitionFailed : Error {
    using Error::Error;
};
struct VerificationFailed : Error {
    VerificationFailed(const std::string& msg, std::string offending_class,
                       std::string residual)
        : Error(msg), offending_class(std::move(offending_class)),
          residual(std::move(residual)) {}
    std::string offending_class;
    std::string residual;
};

} // namespace cmv

#endif
