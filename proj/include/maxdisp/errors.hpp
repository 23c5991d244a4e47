#pragma once

#include <stdexcept>
#include <string>

namespace maxdisp {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- offspring ---
class InvalidAlpha : public Error {
 public:
  using Error::Error;
};
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};
class NotCritical : public Error {
 public:
  using Error::Error;
};
class NotADistribution : public Error {
 public:
  using Error::Error;
};
class DegenerateLaw : public Error {
 public:
  using Error::Error;
};
class WrongKind : public Error {
 public:
  using Error::Error;
};
class DomainError : public Error {
 public:
  using Error::Error;
};

// --- motion ---
class NonpositiveDuration : public Error {
 public:
  using Error::Error;
};
class NonzeroMean : public Error {
 public:
  using Error::Error;
};

// --- engine ---
class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

// --- estimator ---
class GridBeyondStopThreshold : public Error {
 public:
  using Error::Error;
};
class InsufficientData : public Error {
 public:
  using Error::Error;
};

// --- theory ---
class MissingSigma2 : public Error {
 public:
  using Error::Error;
};
class NegativeY : public Error {
 public:
  using Error::Error;
};
class ShootingBracketFailure : public Error {
 public:
  using Error::Error;
};
class NotConverged : public Error {
 public:
  using Error::Error;
};

// --- cli ---
class ParseError : public Error {
 public:
  using Error::Error;
};
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxdisp
