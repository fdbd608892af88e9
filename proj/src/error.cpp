#include "orbitres/error.hpp"

namespace orbitres {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLieType: return "InvalidLieType";
    case ErrorKind::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorKind::NonPositivePart: return "NonPositivePart";
    case ErrorKind::WrongSum: return "WrongSum";
    case ErrorKind::ParityMultiplicityViolation: return "ParityMultiplicityViolation";
    case ErrorKind::UnexpectedLabel: return "UnexpectedLabel";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::ZeroOrbit: return "ZeroOrbit";
    case ErrorKind::InadmissibleQ: return "InadmissibleQ";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorKind::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace orbitres
