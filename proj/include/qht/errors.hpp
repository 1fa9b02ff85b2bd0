#ifndef QHT_ERRORS_HPP
#define QHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qht {

// Input violates a structural invariant (non-Hermitian, bad trace, dim mismatch).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problem size exceeds a configured cap.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computation routes disagree beyond tolerance.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qht

#endif
