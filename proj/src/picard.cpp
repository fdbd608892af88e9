#include "orbitres/picard.hpp"

#include <algorithm>

namespace orbitres {

std::optional<std::uint64_t> AbelianGroupDescriptor::order() const {
  if (free_rank > 0) return std::nullopt;
  std::uint64_t n = 1;
  for (int t : torsion) n *= static_cast<std::uint64_t>(t);
  if (unresolved_extension) n <<= (unresolved_extension->kernel_exponent + 1);
  return n;
}

std::string AbelianGroupDescriptor::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> terms;
  if (free_rank == 1) terms.emplace_back("Z");
  if (free_rank > 1) terms.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string cyclic = "Z/" + std::to_string(torsion[i]);
    terms.push_back(j - i == 1 ? cyclic : "(" + cyclic + ")^" + std::to_string(j - i));
    i = j;
  }
  if (unresolved_extension) {
    terms.push_back("ext(Z/2 by (Z/2)^" + std::to_string(unresolved_extension->kernel_exponent) +
                    ")");
  }
  std::string out;
  for (const auto& term : terms) out += (out.empty() ? "" : " + ") + term;
  return out;
}

AbelianGroupDescriptor picard_sl(const ClassicalOrbit& orbit) {
  if (orbit.lie_type.family() != Family::SL) {
    throw OrbitError(ErrorKind::WrongFamily, "picard_sl needs an sl_n orbit, got " +
                                                 orbit.lie_type.name());
  }
  PartitionProfile prof = profile(orbit);
  AbelianGroupDescriptor g;
  g.free_rank = prof.k - 1;
  if (prof.c >= 2) g.torsion.push_back(prof.c);
  return g;
}

AbelianGroupDescriptor picard_bcd(const ClassicalOrbit& orbit) {
  const Family family = orbit.lie_type.family();
  if (family == Family::SL) {
    throw OrbitError(ErrorKind::WrongFamily, "picard_bcd needs a B/C/D orbit, got " +
                                                 orbit.lie_type.name());
  }
  PartitionProfile prof = profile(orbit);
  AbelianGroupDescriptor g;

  if (family == Family::SP) {
    g.free_rank = prof.l;
    g.torsion.assign(static_cast<std::size_t>(prof.b), 2);
    return g;
  }

  // so_m always has a >= 1 when m is odd; for so_2n the exponent floors at 0.
  const int t = std::max(0, prof.a - 1);
  if (prof.rather_odd) {
    g.unresolved_extension = UnresolvedExtension{t};
  } else {
    g.free_rank = prof.l;
    g.torsion.assign(static_cast<std::size_t>(t), 2);
  }
  return g;
}

AbelianGroupDescriptor picard(const ClassicalOrbit& orbit) {
  return orbit.lie_type.family() == Family::SL ? picard_sl(orbit) : picard_bcd(orbit);
}

std::string_view to_string(QFactorialCertificate cert) {
  return cert == QFactorialCertificate::Certified ? "certified" : "not_certified";
}

QFactorialCertificate q_factorial_certificate(const ClassicalOrbit& orbit) {
  PartitionProfile prof = profile(orbit);
  bool ok = orbit.lie_type.family() == Family::SL ? prof.k == 1 : prof.l == 0;
  return ok ? QFactorialCertificate::Certified : QFactorialCertificate::NotCertified;
}

bool is_factorial(const ClassicalOrbit& orbit) {
  if (is_zero_orbit(orbit)) {
    throw OrbitError(ErrorKind::ZeroOrbit, "factoriality is only defined for non-zero orbits");
  }
  auto parts = orbit.partition.parts();
  PartitionProfile prof = profile(orbit);

  auto single_odd_value_with_mult = [&](int min_mult) {
    if (prof.a != 1) return false;
    for (auto [value, mult] : prof.r) {
      if (value % 2 == 1) return mult >= min_mult;
    }
    return false;
  };

  switch (orbit.lie_type.family()) {
    case Family::SL: return false;
    case Family::SP: return std::ranges::all_of(parts, [](int d) { return d % 2 == 1; });
    case Family::SO_EVEN: return single_odd_value_with_mult(4);
    case Family::SO_ODD: return single_odd_value_with_mult(3);
  }
  return false;
}

}  // namespace orbitres
