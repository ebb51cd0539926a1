#pragma once

#include <stdexcept>
#include <string>

namespace sgw {

// Argument outside the domain where a formula or branch is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative oracle could not reach the requested tolerance.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite-difference stencil would straddle a pole of y.
class PoleProximity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Field left the admissible range during time stepping.
class BlowUp : public std::runtime_error {
 public:
  BlowUp(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace sgw
