#ifndef SDC_ERRORS_HPP
#define SDC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdc {

// Base class for every failure this library reports. All construction-time
// validation throws one of the derived types below; nothing propagates NaNs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonHermitian : public Error {
public:
    using Error::Error;
};

class NonUnitary : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

// A density operator failed its Hermiticity / trace / positivity checks.
class InvalidState : public Error {
public:
    using Error::Error;
};

// relative_entropy(rho, sigma) with rho supported outside supp(sigma):
// the divergence is +infinity and is reported as this error, never a number.
class SupportViolation : public Error {
public:
    using Error::Error;
};

class InvalidProbability : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class NotMES : public Error {
public:
    using Error::Error;
};

}  // namespace sdc

#endif  // SDC_ERRORS_HPP
