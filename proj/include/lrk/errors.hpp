#pragma once

#include <stdexcept>
#include <string>

namespace lrk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates a documented precondition (odd L, alpha <= 0, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Both components of the Bloch vector vanish, so the Bogoliubov angle is undefined.
class DegenerateMode : public Error {
 public:
  using Error::Error;
};

/// A quasiparticle energy on the probe grid fell below the gap floor.
class GaplessConfiguration : public Error {
 public:
  using Error::Error;
};

/// A thermodynamic quantity was requested at a limit where it is not defined (F at beta = 0).
class UndefinedLimit : public Error {
 public:
  using Error::Error;
};

/// Two cycle results that must describe the same cycle do not.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Too few engine-valid points to form a maximum.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Oracle asked to work beyond its size cap.
class OracleLimit : public Error {
 public:
  using Error::Error;
};

/// Dense eigensolver did not converge.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace lrk
