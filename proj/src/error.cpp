#include "pathlab/error.hpp"

namespace pathlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotBiPointed: return "NotBiPointed";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::NotNaturalTame: return "NotNaturalTame";
    case ErrorKind::ConstantPath: return "ConstantPath";
    case ErrorKind::NotATrackPresentation: return "NotATrackPresentation";
    case ErrorKind::InfeasibleProgressFunction: return "InfeasibleProgressFunction";
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::DifferentPaths: return "DifferentPaths";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::StageMismatch: return "StageMismatch";
    case ErrorKind::EndomorphismDetected: return "EndomorphismDetected";
    case ErrorKind::BoundaryCheckFailed: return "BoundaryCheckFailed";
  }
  return "Unknown";
}

bool is_malformed(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::InvalidPath:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::SizeMismatch:
      return true;
    default:
      return false;
  }
}

}  // namespace pathlab
