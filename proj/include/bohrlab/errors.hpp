#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested quantity.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("series has a vanishing constant term") {}
};

/// Raised by the forward Schur algorithm when a parameter leaves the closed disk.
class NonSchurInput : public Error {
 public:
  using Error::Error;
};

class NonVanishingConstantTerm : public Error {
 public:
  NonVanishingConstantTerm() : Error("series must vanish at the origin") {}
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class NoRootFound : public Error {
 public:
  using Error::Error;
};

}  // namespace bohrlab
