#pragma once

#include <stdexcept>
#include <string>

namespace kflag {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown type, malformed word or weight, wrong lengths.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (Weyl group order, root count) was exceeded.
class BoundExceeded : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// An exact-arithmetic invariant failed. These indicate an invalid class or a
/// convention bug, never a user mistake.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public IntegrityError {
 public:
  NotDivisible() : IntegrityError("not divisible") {}
  explicit NotDivisible(const std::string& what) : IntegrityError("not divisible: " + what) {}
};

class NonzeroResidual : public IntegrityError {
 public:
  explicit NonzeroResidual(const std::string& what) : IntegrityError("nonzero residual: " + what) {}
};

class PoleAtOne : public IntegrityError {
 public:
  PoleAtOne() : IntegrityError("pole at 1") {}
};

class RouteMismatch : public IntegrityError {
 public:
  explicit RouteMismatch(const std::string& what) : IntegrityError("route mismatch: " + what) {}
};

class OutsideParabolicImage : public IntegrityError {
 public:
  explicit OutsideParabolicImage(const std::string& what)
      : IntegrityError("coefficient outside parabolic image: " + what) {}
};

}  // namespace kflag
