#include "hyperknot/error.hpp"

namespace hyperknot {

const char* err_name(Err code) {
  switch (code) {
    case Err::NotPrime: return "NotPrime";
    case Err::NotMonic: return "NotMonic";
    case Err::DegreeZero: return "DegreeZero";
    case Err::TNotInvertible: return "TNotInvertible";
    case Err::SpecMismatch: return "SpecMismatch";
    case Err::MalformedTable: return "MalformedTable";
    case Err::AxiomViolation: return "AxiomViolation";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::ParseError: return "ParseError";
    case Err::BadParameters: return "BadParameters";
    case Err::CapExceeded: return "CapExceeded";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::BadColorIndex: return "BadColorIndex";
    case Err::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::TooLarge: return "TooLarge";
    case Err::InsufficientRows: return "InsufficientRows";
    case Err::ZeroCrossings: return "ZeroCrossings";
    case Err::MalformedDocument: return "MalformedDocument";
  }
  return "UnknownError";
}

}  // namespace hyperknot
