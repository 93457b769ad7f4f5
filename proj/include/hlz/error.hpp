#pragma once

#include <stdexcept>
#include <string>

namespace hlz {

enum class ErrorKind {
  Domain,          // argument outside the operation's domain
  DegreeOverflow,  // Bernoulli degree beyond the table
  Pole,            // evaluation at a pole (s = 1 for zeta, sigma = 0 or -1 for gamma)
  WrongKernel,     // z = 1 passed to a z != 1 path or vice versa
  NonConvergent,   // Dirichlet series requested where it diverges
  Conditioning,    // |1 - z| too small for the integral paths
  OutOfRange,      // sigma <= -1
  Unsupported,     // e.g. an unsupported character modulus
  Io
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hlz
