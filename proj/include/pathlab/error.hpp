#pragma once

#include <stdexcept>
#include <string>

namespace pathlab {

enum class ErrorKind {
  MalformedInput,
  InvalidModel,
  InvalidPath,
  IndexOutOfRange,
  SizeMismatch,
  NotBiPointed,
  NotTame,
  NotNaturalTame,
  ConstantPath,
  NotATrackPresentation,
  InfeasibleProgressFunction,
  WrongLength,
  DifferentPaths,
  InvalidPartition,
  SourceTargetMismatch,
  StageMismatch,
  EndomorphismDetected,
  BoundaryCheckFailed,
};

const char* to_string(ErrorKind kind);

/// Malformed inputs map to CLI exit code 1, semantic violations to 2.
bool is_malformed(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pathlab
