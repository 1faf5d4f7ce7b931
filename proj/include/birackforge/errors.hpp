#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace birackforge {

/// Base for failures that come from the mathematics (invalid birack, non-unit
/// determinant, refused search). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or documents. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VariableMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotAUnit : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInvertibleOverRing : public DomainError {
 public:
  using DomainError::DomainError;
};

class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A birack axiom failed. `witness` holds the offending elements (1-based,
/// as printed) and `which` names the axiom.
class AxiomViolation : public DomainError {
 public:
  AxiomViolation(std::string which, std::vector<int> witness, const std::string& what)
      : DomainError(what), which_(std::move(which)), witness_(std::move(witness)) {}

  const std::string& which() const { return which_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string which_;
  std::vector<int> witness_;
};

class InvalidConstantAction : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidTSR : public DomainError {
 public:
  using DomainError::DomainError;
};

class PatternMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotALink : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedSize : public DomainError {
 public:
  using DomainError::DomainError;
};

class RefusedBudget : public DomainError {
 public:
  RefusedBudget(double estimate, const std::string& what) : DomainError(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

}  // namespace birackforge
