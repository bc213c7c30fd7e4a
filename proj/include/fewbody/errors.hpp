#pragma once

#include <stdexcept>
#include <string>

namespace fewbody {

struct VariableMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A sample point landed on a denominator zero too many times.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantSubspaceViolation : std::runtime_error {
  InvariantSubspaceViolation(std::string monomial, std::string overflow)
      : std::runtime_error("operator leaves the invariant space at " + monomial +
                           ": overflow term " + overflow),
        offending_monomial(std::move(monomial)),
        overflow_term(std::move(overflow)) {}
  std::string offending_monomial;
  std::string overflow_term;
};

struct TemplateMismatch : std::runtime_error {
  explicit TemplateMismatch(std::string residual_term)
      : std::runtime_error("operator does not fit the separated template: " + residual_term),
        residual(std::move(residual_term)) {}
  std::string residual;
};

struct TranscriptionError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fewbody
