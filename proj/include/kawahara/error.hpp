#pragma once

#include <stdexcept>
#include <string>

namespace kawahara {

enum class ErrorCode {
  invalid_argument,
  resonant,      // beta = 1/(1+N^2) within tolerance
  inadmissible,  // beta outside the collision window for the requested gap
  degenerate,    // a denominator in a closed-form expression vanished
  numerical,     // eigensolver or root finder failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ResonanceError : public Error {
 public:
  ResonanceError(int mode, const std::string& message)
      : Error(ErrorCode::resonant, message), mode_(mode) {}

  /// Integer N > 1 with beta = 1/(1+N^2).
  int mode() const noexcept { return mode_; }

 private:
  int mode_;
};

}  // namespace kawahara
