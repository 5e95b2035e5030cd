#pragma once

#include <stdexcept>
#include <string>

namespace realclass {

enum class ErrorKind {
  NotIsolated,     // Milnor number is infinite
  NotInM2,         // nonzero constant or linear part
  NotSimple,       // modality >= 1, outside the A/D/E list
  CorankTooLarge,  // corank >= 3
  Internal,        // an algebraic invariant the pipeline relies on failed
};

const char* to_string(ErrorKind kind);

class ClassificationError : public std::runtime_error {
 public:
  ClassificationError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace realclass
