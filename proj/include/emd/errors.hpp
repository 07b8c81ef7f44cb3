#pragma once

#include <stdexcept>
#include <string>

namespace emd {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct InvalidStep : Error {
  using Error::Error;
};

struct NonIntegerSpan : Error {
  using Error::Error;
};

/// Signal has no usable max/min pair (monotone or constant input).
struct NoExtrema : Error {
  using Error::Error;
};

struct DuplicateKnot : Error {
  using Error::Error;
};

/// Knot count not compatible with the requested piecewise-Lagrange degree.
struct SegmentMismatch : Error {
  using Error::Error;
};

struct OutOfDomain : Error {
  using Error::Error;
};

/// Too few extrema to build the envelopes a sifting step needs.
struct InsufficientExtrema : Error {
  using Error::Error;
};

struct IntervalOutOfRange : Error {
  using Error::Error;
};

struct RootBracketFailure : Error {
  using Error::Error;
};

struct IrrationalRatio : Error {
  using Error::Error;
};

struct UnknownExperiment : Error {
  using Error::Error;
};

struct MalformedCsv : Error {
  using Error::Error;
};

} // namespace emd
