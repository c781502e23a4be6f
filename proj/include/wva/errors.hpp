#pragma once

#include <stdexcept>
#include <string>

namespace wva {

/// Base class for all typed errors. `name()` is a stable machine-readable
/// identifier used by the CLI for error reporting and exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class InvalidStateError : public Error {
 public:
  explicit InvalidStateError(const std::string& what)
      : Error("invalid_state", what) {}
};

class InvalidParameterError : public Error {
 public:
  explicit InvalidParameterError(const std::string& what)
      : Error("invalid_parameter", what) {}
};

/// Raised when |<post|pre>| falls below the division floor. Carries the
/// offending overlap probability so callers probing epsilon -> 0 can react.
class OrthogonalPostselectionError : public Error {
 public:
  OrthogonalPostselectionError(const std::string& what, double overlap_probability)
      : Error("orthogonal_postselection", what),
        overlap_probability_(overlap_probability) {}
  double overlap_probability() const { return overlap_probability_; }

 private:
  double overlap_probability_;
};

class ZeroPostselectionError : public Error {
 public:
  explicit ZeroPostselectionError(const std::string& what)
      : Error("zero_postselection", what) {}
};

class UndefinedGainError : public Error {
 public:
  explicit UndefinedGainError(const std::string& what)
      : Error("undefined_gain", what) {}
};

class EmptySpectrumError : public Error {
 public:
  explicit EmptySpectrumError(const std::string& what)
      : Error("empty_spectrum", what) {}
};

class NoSignalError : public Error {
 public:
  explicit NoSignalError(const std::string& what) : Error("no_signal", what) {}
};

class DetectorMisconfiguredError : public Error {
 public:
  explicit DetectorMisconfiguredError(const std::string& what)
      : Error("detector_misconfigured", what) {}
};

class OutOfRangeShiftError : public Error {
 public:
  explicit OutOfRangeShiftError(const std::string& what)
      : Error("out_of_range_shift", what) {}
};

class AmbiguousBracketError : public Error {
 public:
  explicit AmbiguousBracketError(const std::string& what)
      : Error("ambiguous_bracket", what) {}
};

class StudyDegenerateError : public Error {
 public:
  explicit StudyDegenerateError(const std::string& what)
      : Error("study_degenerate", what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config_error", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io_error", what) {}
};

}  // namespace wva
