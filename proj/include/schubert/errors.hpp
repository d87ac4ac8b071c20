#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// partitions
class BoxViolation : public Error {
public:
    using Error::Error;
};
class NotWeaklyDecreasing : public Error {
public:
    using Error::Error;
};
class WrongLength : public Error {
public:
    using Error::Error;
};
class InvalidAmbient : public Error {
public:
    using Error::Error;
};
class DegeneratePartition : public Error {
public:
    using Error::Error;
};

/// Malformed `gr(m,n):a1,...,am` text; `position` is the 0-based column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// linear algebra
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// construction bugs; never expected on valid input
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

// exterior algebra
class DegenerateK : public Error {
public:
    using Error::Error;
};
class TooManyRows : public Error {
public:
    using Error::Error;
};
class ResourceExceeded : public Error {
public:
    using Error::Error;
};

// cohomology / rigidity
class IncompatiblePair : public Error {
public:
    using Error::Error;
};
class NotApplicable : public Error {
public:
    using Error::Error;
};

/// Raised by the decomposition audit when the complement does not account for
/// the whole of Hom(n_a, m/n_a).
class AuditFailure : public Error {
public:
    AuditFailure(const std::string& what, long long missing)
        : Error(what), missing_(missing) {}
    long long missing() const noexcept { return missing_; }

private:
    long long missing_;
};

} // namespace schubert
