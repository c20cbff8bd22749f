#pragma once

#include <stdexcept>
#include <string>

namespace egc {

// Root of every error the library reports. Each subclass names one failure
// mode so callers (and the CLI's exit-code mapping) can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonIntegrable : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

// Two independent evaluators of the same quantity disagree.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exact sum that must be an integer reduced to a proper fraction.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace egc
