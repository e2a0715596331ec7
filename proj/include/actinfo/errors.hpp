// Error types shared across the library.
//
// ValidationError carries a machine-checkable code so callers (and the CLI
// exit-code mapping) can distinguish failure kinds without string matching.
// ParseError marks malformed input files; IoError marks filesystem failures.

#pragma once

#include <stdexcept>
#include <string>

namespace actinfo {

enum class Errc {
    // distribution construction / algebra
    EmptySpace,
    LengthMismatch,
    NegativeMass,
    NotNormalized,
    DuplicateLabel,
    IndexOutOfBounds,
    ProductSpaceTooLarge,
    SpaceMismatch,
    NotFullySupported,
    InvalidLogBase,
    // regimes
    POutOfRange,
    QOutOfRange,
    TargetTooLarge,
    // graphs / walks
    BadEdge,
    SelfLoop,
    DuplicateEdge,
    NotRegular,
    NotConnected,
    GraphTooLarge,
    LazinessOutOfRange,
    // parametric families
    BadDomain,
    BadParamGrid,
    ParamOutOfBounds,
    DegenerateScale,
    EmptyTarget,
    TargetIntervalOutOfRange,
    DeltaOutOfRange,
    // sweeps
    BadSweepGrid,
};

const char* to_string(Errc code) noexcept;

class ValidationError : public std::runtime_error {
  public:
    ValidationError(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

// Malformed or schema-violating input file. Messages name the offending field.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Filesystem-level failure (missing file, unwritable output path).
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace actinfo
