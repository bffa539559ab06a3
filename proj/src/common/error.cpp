#include "polyoracle/common/error.hpp"

namespace polyoracle {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::StreamTooLarge: return "StreamTooLarge";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace polyoracle
