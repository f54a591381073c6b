#pragma once

#include <stdexcept>
#include <string>

namespace boppana {

// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace boppana

namespace boppana {

// An internal consistency check on a certificate did not hold.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace boppana
