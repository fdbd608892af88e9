#include "orbitres/selfcheck.hpp"

#include "orbitres/enumeration.hpp"
#include "orbitres/hesselink.hpp"
#include "orbitres/picard.hpp"
#include "orbitres/resolution.hpp"

namespace orbitres {

namespace {

std::string describe(const ClassicalOrbit& o) {
  std::string s = o.lie_type.name() + " [" + format_partition(o.partition) + "]";
  if (o.very_even_label) s += " " + std::string(to_string(*o.very_even_label));
  return s;
}

}  // namespace

SelfCheckSummary run_selfcheck(int max_m) {
  SelfCheckSummary sum;
  sum.max_m = max_m;

  for (const LieType& type : classical_types_up_to(max_m)) {
    for (const ClassicalOrbit& orbit : enumerate_orbits(type)) {
      ++sum.orbits_checked;
      auto fail = [&](std::string check, std::string detail) {
        sum.failures.push_back({std::move(check), describe(orbit), std::move(detail)});
      };

      try {
        ResolutionVerdict verdict = admits_symplectic_resolution(orbit);
        if (verdict.answer == Answer::No) {
          ++sum.no_verdicts;
          if (type.m() <= 8) sum.no_verdict_orbits.push_back(describe(orbit));
        }
        if (verdict.answer == Answer::Unknown) fail("classical-verdict", "Unknown verdict");
        if (!springer_consistency(orbit)) fail("even-implies-yes", "even orbit without resolution");

        Polarizability pol = polarizable(orbit);
        sum.in_image_pairs += static_cast<std::int64_t>(pol.witnesses.size());
        if (verdict.answer == Answer::Yes && !pol.polarizable) {
          fail("yes-implies-polarizable", "resolution without polarization");
        }

        if (type.is_bcd()) {
          ++sum.bcd_orbits_checked;
          if (!is_zero_orbit(orbit) && is_factorial(orbit) != picard(orbit).is_trivial()) {
            fail("factorial-iff-pic-trivial",
                 "factorial=" + std::to_string(is_factorial(orbit)) + ", Pic=" +
                     picard(orbit).to_string());
          }
          if (profile(orbit).l == 0 && picard(orbit).free_rank != 0) {
            fail("l-zero-implies-rank-zero", "Pic=" + picard(orbit).to_string());
          }
        }
      } catch (const OrbitError& e) {
        fail(std::string(to_string(e.kind())), e.what());
      }
    }
  }
  return sum;
}

}  // namespace orbitres
