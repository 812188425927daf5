#pragma once

#include <stdexcept>
#include <string>

namespace mubkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInverse : Error {
    explicit ZeroInverse(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct ModulusMismatch : Error {
    explicit ModulusMismatch(const std::string& msg) : Error(msg) {}
};

struct NotOrderM : Error {
    explicit NotOrderM(const std::string& msg) : Error(msg) {}
};

struct NotProjector : Error {
    explicit NotProjector(const std::string& msg) : Error(msg) {}
};

struct NotUnit : Error {
    explicit NotUnit(const std::string& msg) : Error(msg) {}
};

struct NotSymplectic : Error {
    explicit NotSymplectic(const std::string& msg) : Error(msg) {}
};

struct SearchFailed : Error {
    explicit SearchFailed(const std::string& msg) : Error(msg) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& msg) : Error(msg) {}
};

struct InvariantVectorNotUnique : Error {
    explicit InvariantVectorNotUnique(const std::string& msg) : Error(msg) {}
};

} // namespace mubkit
