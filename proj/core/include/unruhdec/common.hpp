#pragma once

#include <stdexcept>
#include <string>

namespace unruhdec {

// Shared numerical tolerances. Eigenvalues of a density matrix in
// [-kPsdTolerance, 0) are treated as floating-point noise and clamped to 0;
// anything more negative is a construction bug and raises an error.
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix fails the Hermiticity precondition of a self-adjoint solve.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue iteration failed or the reconstruction residual is too large.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A spectrum expected to be real has imaginary parts above tolerance.
class ComplexSpectrumError : public Error {
 public:
  using Error::Error;
};

/// A constructed state violates Hermiticity / trace / positivity bounds.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Measurement outcome has vanishing probability; conditioned state undefined.
class DegenerateOutcomeError : public Error {
 public:
  using Error::Error;
};

/// A root/transition search found no sign change on the given bracket.
class NoBracketError : public Error {
 public:
  using Error::Error;
};

/// Malformed token in a config file or command-line argument.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Failure at one grid point of a time sweep; carries the offending lambda_t.
class SweepError : public Error {
 public:
  SweepError(double lambda_t, const std::string& reason)
      : Error("sweep failed at lambda_t=" + std::to_string(lambda_t) + ": " +
              reason),
        lambda_t_(lambda_t) {}

  double lambda_t() const { return lambda_t_; }

 private:
  double lambda_t_;
};

}  // namespace unruhdec
