#pragma once

#include <stdexcept>
#include <string>

namespace terracini {

// Raised when a request exceeds a configured size limit (e.g. too many
// monomials for dense rank computation).
class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two computations that must agree do not: the direct and Segre
// routes disagree, or a certificate fails its own verification. Always a bug
// or an astronomically unlucky sample, never a mathematical outcome.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when random sampling could not produce a configuration in general
// position within the retry budget.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace terracini
