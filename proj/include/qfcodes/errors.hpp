#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfcodes {

/// Invalid construction parameters (composite p, inadmissible descent N, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation undefined on its input, e.g. inverting zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands from different fields, or a trace target that is not a subfield.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input the toolkit deliberately does not handle (zero quadratic form).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::string required, std::uint64_t budget)
      : std::runtime_error(what + " (requires " + required + ", budget " + std::to_string(budget) + ")"),
        required_(std::move(required)),
        budget_(budget) {}

  const std::string& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string required_;
  std::uint64_t budget_;
};

}  // namespace qfcodes
