#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitres/orbit.hpp"

namespace orbitres {

/// An extension of Z/2 by (Z/2)^kernel_exponent whose isomorphism type is
/// not determined. Its order is 2^(kernel_exponent + 1).
struct UnresolvedExtension {
  int kernel_exponent = 0;
  static constexpr int quotient_order = 2;

  bool operator==(const UnresolvedExtension&) const = default;
};

/// Z^free_rank + (sum of Z/t for t in torsion), or an unresolved extension.
struct AbelianGroupDescriptor {
  int free_rank = 0;
  std::vector<int> torsion;  // cyclic factor orders, each >= 2, sorted
  std::optional<UnresolvedExtension> unresolved_extension;

  bool is_trivial() const noexcept {
    return free_rank == 0 && torsion.empty() && !unresolved_extension;
  }

  bool is_finite() const noexcept { return free_rank == 0; }

  /// Order of the group; nullopt when the free rank is positive.
  std::optional<std::uint64_t> order() const;

  /// e.g. "Z^2 + (Z/2)^3", "Z/3", "0", "ext(Z/2 by (Z/2)^1)".
  std::string to_string() const;

  bool operator==(const AbelianGroupDescriptor&) const = default;
};

AbelianGroupDescriptor picard_sl(const ClassicalOrbit& orbit);
AbelianGroupDescriptor picard_bcd(const ClassicalOrbit& orbit);
AbelianGroupDescriptor picard(const ClassicalOrbit& orbit);

enum class QFactorialCertificate { Certified, NotCertified };

std::string_view to_string(QFactorialCertificate cert);

/// One-sided: Certified proves Q-factoriality of the normalized closure,
/// NotCertified proves nothing.
QFactorialCertificate q_factorial_certificate(const ClassicalOrbit& orbit);

/// Factoriality of the normalized closure. Throws ZeroOrbit for [1^m].
bool is_factorial(const ClassicalOrbit& orbit);

}  // namespace orbitres
