// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitres/enumeration.hpp"
#include "orbitres/hesselink.hpp"
#include "orbitres/picard.hpp"
#include "orbitres/resolution.hpp"

using namespace orbitres;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string name(const ClassicalOrbit& o) {
  return o.lie_type.name() + " [" + format_partition(o.partition) + "]";
}

ClassicalOrbit orbit(Family f, int m, std::vector<int> parts) {
  return validate_orbit(LieType(f, m), parts);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<ClassicalOrbit> bcd_orbits_up_to(int max_m) {
  std::vector<ClassicalOrbit> out;
  for (const LieType& t : classical_types_up_to(max_m)) {
    if (!t.is_bcd()) continue;
    for (const auto& o : enumerate_orbits(t)) out.push_back(o);
  }
  return out;
}

// 1. so8: 12 orbits, exactly [3,2^2,1] and [2^2,1^4] without resolution, < 1 s.
Outcome so8_atlas() {
  Outcome r;
  auto start = Clock::now();
  auto orbits = collect_orbits(LieType(Family::SO_EVEN, 8));
  std::set<std::string> no;
  for (const auto& o : orbits) {
    if (admits_symplectic_resolution(o).answer == Answer::No) no.insert(format_partition(o.partition));
  }
  double elapsed = seconds_since(start);
  r.require(orbits.size() == 12, "expected 12 orbits, got " + std::to_string(orbits.size()));
  r.require(no == std::set<std::string>{"3,2^2,1", "2^2,1^4"}, "wrong set of No verdicts");
  r.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  r.detail = r.pass ? "12 orbits, No = {[3,2^2,1], [2^2,1^4]}, " + std::to_string(elapsed) + " s"
                    : r.detail;
  return r;
}

// 2. so7: only the minimal orbit has no resolution; [3,2,2] -> Yes, q = 1.
Outcome so7_atlas() {
  Outcome r;
  std::vector<std::string> no;
  for (const auto& o : enumerate_orbits(LieType(Family::SO_ODD, 7))) {
    if (admits_symplectic_resolution(o).answer == Answer::No) no.push_back(format_partition(o.partition));
  }
  r.require(no == std::vector<std::string>{"2^2,1^3"}, "No verdicts differ from {[2^2,1^3]}");
  auto v = admits_symplectic_resolution(orbit(Family::SO_ODD, 7, {3, 2, 2}));
  r.require(v.answer == Answer::Yes && v.witness == Witness{QWitness{1}},
            "[3,2,2] is not Yes with witness q=1");
  return r;
}

// 3. sp6 verdicts.
Outcome sp6_cases() {
  Outcome r;
  auto verdict = [](std::vector<int> d) {
    return admits_symplectic_resolution(orbit(Family::SP, 6, std::move(d))).answer;
  };
  r.require(verdict({4, 1, 1}) == Answer::No, "[4,1,1] should be No");
  r.require(verdict({2, 1, 1, 1, 1}) == Answer::No, "[2,1^4] should be No");
  r.require(verdict({3, 3}) == Answer::Yes, "[3,3] should be Yes");
  r.require(verdict({2, 2, 2}) == Answer::Yes, "[2,2,2] should be Yes");
  return r;
}

// 4. closed form == search for all B/C/D partitions with m <= 24, < 60 s.
Outcome route_equivalence(const std::vector<ClassicalOrbit>& orbits) {
  Outcome r;
  auto start = Clock::now();
  long mismatches = 0;
  for (const auto& o : orbits) {
    try {
      bool closed = closed_form_verdict(o).answer == Answer::Yes;
      if (closed != resolution_by_search(o)) {
        ++mismatches;
        r.require(false, "mismatch at " + name(o));
      }
    } catch (const OrbitError& e) {
      ++mismatches;
      r.require(false, name(o) + ": " + e.what());
    }
  }
  double elapsed = seconds_since(start);
  r.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (r.pass) {
    r.detail = std::to_string(orbits.size()) + " orbits, 0 mismatches, " +
               std::to_string(elapsed) + " s";
  }
  return r;
}

// 5. even => Yes and Yes => polarizable over the same enumeration.
Outcome even_and_richardson(const std::vector<ClassicalOrbit>& orbits) {
  Outcome r;
  for (const auto& o : orbits) {
    auto v = admits_symplectic_resolution(o);
    if (is_even_orbit(o)) r.require(v.answer == Answer::Yes, "even orbit without resolution: " + name(o));
    if (v.answer == Answer::Yes) {
      r.require(polarizable(o).polarizable, "resolution without polarization: " + name(o));
    }
  }
  return r;
}

// 6. factorial <=> Pic trivial (non-zero orbits); l = 0 => free rank 0.
Outcome picard_coherence(const std::vector<ClassicalOrbit>& orbits) {
  Outcome r;
  for (const auto& o : orbits) {
    auto g = picard(o);
    if (!is_zero_orbit(o)) {
      r.require(is_factorial(o) == g.is_trivial(), "factorial/Pic mismatch at " + name(o));
    }
    if (profile(o).l == 0) r.require(g.free_rank == 0, "l = 0 but positive rank at " + name(o));
  }
  return r;
}

// 7. minimal orbits.
Outcome minimal_sweep() {
  Outcome r;
  auto check = [&](Family f, int m, Answer expected) {
    auto o = minimal_orbit(LieType(f, m));
    r.require(admits_symplectic_resolution(o).answer == expected, "wrong verdict for " + name(o));
  };
  for (int n = 2; n <= 8; ++n) check(Family::SO_ODD, 2 * n + 1, Answer::No);
  for (int n = 3; n <= 8; ++n) check(Family::SP, 2 * n, Answer::No);
  for (int n = 4; n <= 8; ++n) check(Family::SO_EVEN, 2 * n, Answer::No);
  for (int m = 2; m <= 10; ++m) check(Family::SL, m, Answer::Yes);
  return r;
}

// 8. so_2n [2^{n-1},1^2], n = 3, 5, 7.
Outcome small_resolution_family() {
  Outcome r;
  for (int n : {3, 5, 7}) {
    std::vector<int> d(static_cast<std::size_t>(n - 1), 2);
    d.insert(d.end(), {1, 1});
    auto o = orbit(Family::SO_EVEN, 2 * n, d);
    auto v = admits_symplectic_resolution(o);
    r.require(v.answer == Answer::Yes && v.witness && std::holds_alternative<PairWitness>(*v.witness),
              name(o) + " is not Yes via the pair clause");
    r.require(picard(o).free_rank == 1, name(o) + " Picard rank != 1");
    r.require(q_factorial_certificate(o) == QFactorialCertificate::NotCertified,
              name(o) + " unexpectedly certified");
  }
  return r;
}

// 9. exceptional table.
Outcome exceptional_table() {
  Outcome r;
  std::map<std::string, int> counts;
  for (const auto& rec : exceptional_database()) {
    auto v = exceptional_verdict(rec.algebra, rec.label);
    r.require(v && v->answer == rec.verdict, "lookup of " + std::string(rec.label) + " failed");
    counts[std::string(to_string(rec.algebra)) + " " + std::string(to_string(rec.verdict))]++;
  }
  std::map<std::string, int> expected{{"F4 yes", 1}, {"E6 yes", 5},    {"E7 yes", 2},
                                      {"E7 unknown", 3}, {"E8 yes", 3}, {"E8 unknown", 4}};
  r.require(counts == expected, "table counts differ");
  for (const char* alg : {"G2", "F4", "E6", "E7", "E8"}) {
    for (const char* label : {"A1", "G2(a1)", "E8", "A2+A1", "F4(a3)"}) {
      r.require(!exceptional_verdict(alg, label).has_value(),
                std::string(alg) + " " + label + " should be NotInDatabase");
    }
  }
  return r;
}

// 10. every in-image (d, q) gives a non-negative integral exponent.
Outcome integrality(const std::vector<ClassicalOrbit>& orbits) {
  Outcome r;
  long pairs = 0;
  for (const auto& o : orbits) {
    HesselinkContext ctx = HesselinkContext::of(o.lie_type);
    for (int q = 0; q <= ctx.m; ++q) {
      if (!is_admissible(ctx, q) || !in_image_Sq(ctx, o.partition, q)) continue;
      ++pairs;
      try {
        N_P(ctx, o.partition, q);
      } catch (const OrbitError& e) {
        r.require(false, name(o) + " q=" + std::to_string(q) + ": " + e.what());
      }
    }
  }
  if (r.pass) r.detail = std::to_string(pairs) + " in-image pairs";
  return r;
}

}  // namespace

int main() {
  auto orbits = bcd_orbits_up_to(24);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 so8 atlas", so8_atlas},
      {"AC2 so7 atlas", so7_atlas},
      {"AC3 sp6 verdicts", sp6_cases},
      {"AC4 route equivalence m<=24", [&] { return route_equivalence(orbits); }},
      {"AC5 even=>yes, yes=>polarizable", [&] { return even_and_richardson(orbits); }},
      {"AC6 Picard/factoriality coherence", [&] { return picard_coherence(orbits); }},
      {"AC7 minimal-orbit sweep", minimal_sweep},
      {"AC8 so_2n [2^(n-1),1^2] family", small_resolution_family},
      {"AC9 exceptional table", exceptional_table},
      {"AC10 integrality of N(P) exponents", [&] { return integrality(orbits); }},
  };

  int failed = 0;
  for (auto& [label, fn] : criteria) {
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::printf("[%s] %s%s%s\n", out.pass ? "PASS" : "FAIL", label.c_str(),
                out.detail.empty() ? "" : " - ", out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
