#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "orbitres/orbit.hpp"

namespace orbitres {

enum class Answer { Yes, No, Unknown };
enum class Route { ClosedForm, HesselinkSearch, AlwaysSLn, ExceptionalLookup, EvenSpringer };

std::string_view to_string(Answer answer);
std::string_view to_string(Route route);
Answer parse_answer(std::string_view text);
Route parse_route(std::string_view text);

/// q such that d_1..d_q are odd and the remaining parts even.
struct QWitness {
  int q = 0;
  bool operator==(const QWitness&) const = default;
};

/// so_2n only: the two odd parts sit at positions 2k-1 and 2k.
struct PairWitness {
  int k = 0;
  bool operator==(const PairWitness&) const = default;
};

using Witness = std::variant<QWitness, PairWitness>;

struct ResolutionVerdict {
  Answer answer = Answer::No;
  std::optional<Witness> witness;
  Route route = Route::ClosedForm;
  bool cross_checked = false;

  bool operator==(const ResolutionVerdict&) const = default;
};

ResolutionVerdict closed_form_verdict(const ClassicalOrbit& orbit);

/// Verdict from the Hesselink search alone (witness = the q with N(P) = 1).
ResolutionVerdict search_verdict(const ClassicalOrbit& orbit);

/// Runs both classical routes for sp/so and throws CrossCheckMismatch if they
/// disagree. Never returns Unknown.
ResolutionVerdict admits_symplectic_resolution(const ClassicalOrbit& orbit);

/// even orbit => verdict Yes.
bool springer_consistency(const ClassicalOrbit& orbit);

enum class ExceptionalAlgebra { G2, F4, E6, E7, E8 };

std::string_view to_string(ExceptionalAlgebra algebra);
/// Throws UnknownAlgebra.
ExceptionalAlgebra parse_exceptional_algebra(std::string_view text);

struct ExceptionalRecord {
  ExceptionalAlgebra algebra;
  std::string_view label;  // Bala-Carter, ASCII: "D5(a1)+A1"
  Answer verdict;
  std::string_view note;
};

std::span<const ExceptionalRecord> exceptional_database();

/// Strips whitespace and maps Unicode subscript digits, so "A₄ + A₁" == "A4+A1".
std::string normalize_bala_carter(std::string_view label);

/// nullopt means the orbit is not in the database (see kNotInDatabaseGuidance).
/// Throws UnknownAlgebra.
std::optional<ResolutionVerdict> exceptional_verdict(ExceptionalAlgebra algebra,
                                                     std::string_view label);
std::optional<ResolutionVerdict> exceptional_verdict(std::string_view algebra,
                                                     std::string_view label);

inline constexpr std::string_view kNotInDatabaseGuidance =
    "not in database: only non-even Richardson orbits with a known answer or an explicitly open "
    "case are stored. An even orbit always admits a symplectic resolution (Springer), and in "
    "G2, F4, E6 a resolution exists iff the orbit is Richardson; deciding even/Richardson status "
    "needs external orbit tables.";

}  // namespace orbitres
