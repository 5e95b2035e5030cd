#include "realclass/errors.hpp"

namespace realclass {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIsolated: return "not-isolated";
    case ErrorKind::NotInM2: return "not-in-m2";
    case ErrorKind::NotSimple: return "not-simple";
    case ErrorKind::CorankTooLarge: return "corank-too-large";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

}  // namespace realclass
