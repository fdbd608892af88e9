#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitres {

enum class ErrorKind {
  InvalidLieType,
  NotWeaklyDecreasing,
  NonPositivePart,
  WrongSum,
  ParityMultiplicityViolation,
  UnexpectedLabel,
  RankTooSmall,
  WrongFamily,
  ZeroOrbit,
  InadmissibleQ,
  NotInImage,
  NonIntegralExponent,
  CrossCheckMismatch,
  UnknownAlgebra,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class OrbitError : public std::runtime_error {
 public:
  OrbitError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbitres
