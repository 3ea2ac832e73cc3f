#ifndef MORIKIT_ERRORS_HPP
#define MORIKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace morikit {

/** Thrown when an input violates a documented precondition. */
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/** Thrown when an enumeration exceeds its configured resource cap. */
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace morikit

#endif
