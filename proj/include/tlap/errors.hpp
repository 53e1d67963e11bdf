#pragma once

#include <stdexcept>
#include <string>

namespace tlap {

// Bad argument or violated precondition (k out of range, alpha outside its window, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A family member that cannot satisfy its structural assumptions for any window.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Hessian requested on a corner locus or at a singular radial origin.
class SingularPointError : public std::domain_error {
 public:
  SingularPointError(const std::string& what, double location)
      : std::domain_error(what), location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

// Non-finite state during time stepping; carries the last radius with a finite state.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double last_good_r)
      : std::runtime_error(what), last_good_r_(last_good_r) {}
  double last_good_r() const noexcept { return last_good_r_; }

 private:
  double last_good_r_;
};

// Argument outside the range of a monotone map (finite-range quadrature inverse).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A check that must pass before the requested operation ran and failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tlap
