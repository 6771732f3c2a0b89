#pragma once

#include <stdexcept>
#include <string>

namespace hyperknot {

enum class Err {
  NotPrime,
  NotMonic,
  DegreeZero,
  TNotInvertible,
  SpecMismatch,
  MalformedTable,
  AxiomViolation,
  IndexOutOfRange,
  ParseError,
  BadParameters,
  CapExceeded,
  LengthMismatch,
  BadColorIndex,
  SearchSpaceTooLarge,
  ShapeMismatch,
  TooLarge,
  InsufficientRows,
  ZeroCrossings,
  MalformedDocument,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& detail)
      : std::runtime_error(std::string(err_name(code)) + ": " + detail), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace hyperknot
