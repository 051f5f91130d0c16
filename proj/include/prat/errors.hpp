#pragma once

#include <stdexcept>
#include <string>

namespace prat {

/// Precondition on mathematical input failed (degree too small, f = 0 mod p, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Splitting of p cannot be read off f mod p: p may divide the index.
class SplittingUndetermined : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed user data: records, CLI values.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Maps to exit code 2 in the CLI.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace prat
