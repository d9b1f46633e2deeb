#pragma once

// Exception taxonomy. Everything thrown by this library derives from Error,
// so callers can distinguish bad inputs (ConfigError and children → CLI exit
// code 1) from numerical/domain failures (everything else → exit code 2).

#include <stdexcept>
#include <string>

namespace postsel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated basis too small: an operation would push weight past the top slot.
struct TruncationOverflow : Error {
  using Error::Error;
};

// Two vectors with different dims were combined.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A vector with (numerically) zero norm cannot be normalized.
struct ZeroVector : Error {
  using Error::Error;
};

// tan(θ/2) has no finite value: preselection angle at/through π.
struct DivergentWeakValue : Error {
  using Error::Error;
};

// g² is a 0/0 ratio on (numerical) vacuum.
struct VacuumUndefined : Error {
  using Error::Error;
};

// Cat normalization 2 + 2e^{-2|α|²}cos(ω) ≈ 0: the two branches cancel.
struct DegenerateCat : Error {
  using Error::Error;
};

// A physical invariant (probability sum, Q ≥ -1, S_φ ≥ -1/2, ...) failed.
struct InvariantViolation : Error {
  using Error::Error;
};

// Malformed configuration file, key, value, or axis.
struct ConfigError : Error {
  using Error::Error;
};

// Config text that cannot be parsed at all (bad line syntax, unknown key,
// non-numeric value); domain violations use plain ConfigError.
struct ConfigParseError : ConfigError {
  using ConfigError::ConfigError;
};

// `figure --preset` with an id that is not in the preset table.
struct UnknownPreset : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace postsel
