// SPDX-License-Identifier: Apache-2.0

#ifndef RISIM_ERRORS_HPP
#define RISIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace risim {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Rejected at construction: non-positive power, bad count, coincident nodes, ...
class InvalidParameter : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// Denominator below the 1e-12 ohm threshold in an impedance map.
class SingularityError : public Error {
  public:
    using Error::Error;
};

/// Amplification power budget is non-positive for the requested element count.
class InfeasibleBudget : public Error {
  public:
    using Error::Error;
};

class DegenerateChannel : public Error {
  public:
    using Error::Error;
};

/// Iteration limit hit before the requested tolerance.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// Malformed or incomplete scenario configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace risim

#endif
