#pragma once

#include <stdexcept>
#include <string>

namespace homroll {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonSquare : Error {
  using Error::Error;
};

// A computation produced NaN or Inf.
struct NonFinite : Error {
  using Error::Error;
};

struct OddPanels : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

// A bracket/Ad result failed to project back onto the algebra basis.
struct NotClosed : Error {
  using Error::Error;
};

struct TooFarFromGroup : Error {
  using Error::Error;
};

// The combined (h, m) basis of a reductive split is numerically singular.
struct SingularSplit : Error {
  using Error::Error;
};

struct NotSkew : Error {
  using Error::Error;
};

struct NotTangent : Error {
  using Error::Error;
};

struct BadAlpha : Error {
  using Error::Error;
};

struct BadBasePoint : Error {
  using Error::Error;
};

// Post-correction state drift exceeded the hard limit during integration.
struct StateInvariantViolated : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace homroll
