#include "orbitres/resolution.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "orbitres/hesselink.hpp"

namespace orbitres {

namespace {

// The q with d_1..d_q odd and d_{q+1}.. even, if the partition has that
// shape. It is unique: it equals the number of odd parts.
std::optional<int> odd_prefix_q(const Partition& d) {
  int q = 0;
  while (q < d.size() && d.at(q + 1) % 2 == 1) ++q;
  for (int j = q + 1; j <= d.size(); ++j) {
    if (d.at(j) % 2 == 1) return std::nullopt;
  }
  return q;
}

std::optional<int> odd_pair_position(const Partition& d) {
  std::vector<int> odd_positions;
  for (int j = 1; j <= d.size(); ++j) {
    if (d.at(j) % 2 == 1) odd_positions.push_back(j);
  }
  if (odd_positions.size() != 2) return std::nullopt;
  if (odd_positions[0] % 2 == 1 && odd_positions[1] == odd_positions[0] + 1) {
    return (odd_positions[0] + 1) / 2;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::ClosedForm: return "closed_form";
    case Route::HesselinkSearch: return "hesselink_search";
    case Route::AlwaysSLn: return "always_sln";
    case Route::ExceptionalLookup: return "exceptional_lookup";
    case Route::EvenSpringer: return "even_springer";
  }
  return "?";
}

Answer parse_answer(std::string_view text) {
  for (Answer a : {Answer::Yes, Answer::No, Answer::Unknown}) {
    if (to_string(a) == text) return a;
  }
  throw OrbitError(ErrorKind::ParseError, "unknown answer '" + std::string(text) + "'");
}

Route parse_route(std::string_view text) {
  for (Route r : {Route::ClosedForm, Route::HesselinkSearch, Route::AlwaysSLn,
                  Route::ExceptionalLookup, Route::EvenSpringer}) {
    if (to_string(r) == text) return r;
  }
  throw OrbitError(ErrorKind::ParseError, "unknown route '" + std::string(text) + "'");
}

ResolutionVerdict closed_form_verdict(const ClassicalOrbit& orbit) {
  const Family family = orbit.lie_type.family();
  if (family == Family::SL) return {Answer::Yes, std::nullopt, Route::AlwaysSLn, false};

  const Partition& d = orbit.partition;
  ResolutionVerdict v{Answer::No, std::nullopt, Route::ClosedForm, false};
  if (auto q = odd_prefix_q(d)) {
    bool parity_ok = family == Family::SO_ODD ? *q % 2 == 1 : *q % 2 == 0;
    if (parity_ok && !(family == Family::SO_EVEN && *q == 2)) {
      v.answer = Answer::Yes;
      v.witness = QWitness{*q};
      return v;
    }
  }
  if (family == Family::SO_EVEN) {
    if (auto k = odd_pair_position(d)) {
      v.answer = Answer::Yes;
      v.witness = PairWitness{*k};
    }
  }
  return v;
}

ResolutionVerdict search_verdict(const ClassicalOrbit& orbit) {
  if (!orbit.lie_type.is_bcd()) return {Answer::Yes, std::nullopt, Route::AlwaysSLn, false};
  ResolutionVerdict v{Answer::No, std::nullopt, Route::HesselinkSearch, false};
  if (auto q = resolution_witness_by_search(orbit)) {
    v.answer = Answer::Yes;
    v.witness = QWitness{*q};
  }
  return v;
}

ResolutionVerdict admits_symplectic_resolution(const ClassicalOrbit& orbit) {
  ResolutionVerdict closed = closed_form_verdict(orbit);
  if (!orbit.lie_type.is_bcd()) return closed;

  ResolutionVerdict searched = search_verdict(orbit);
  if (closed.answer != searched.answer) {
    throw OrbitError(ErrorKind::CrossCheckMismatch,
                     orbit.lie_type.name() + " [" + format_partition(orbit.partition) +
                         "]: closed form says " + std::string(to_string(closed.answer)) +
                         ", Hesselink search says " + std::string(to_string(searched.answer)));
  }
  closed.cross_checked = true;
  if (closed.answer == Answer::Yes && is_even_orbit(orbit)) closed.route = Route::EvenSpringer;
  return closed;
}

bool springer_consistency(const ClassicalOrbit& orbit) {
  return !is_even_orbit(orbit) || admits_symplectic_resolution(orbit).answer == Answer::Yes;
}

std::string_view to_string(ExceptionalAlgebra algebra) {
  switch (algebra) {
    case ExceptionalAlgebra::G2: return "G2";
    case ExceptionalAlgebra::F4: return "F4";
    case ExceptionalAlgebra::E6: return "E6";
    case ExceptionalAlgebra::E7: return "E7";
    case ExceptionalAlgebra::E8: return "E8";
  }
  return "?";
}

ExceptionalAlgebra parse_exceptional_algebra(std::string_view text) {
  std::string t = normalize_bala_carter(text);
  std::ranges::transform(t, t.begin(),
                         [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (auto a : {ExceptionalAlgebra::G2, ExceptionalAlgebra::F4, ExceptionalAlgebra::E6,
                 ExceptionalAlgebra::E7, ExceptionalAlgebra::E8}) {
    if (to_string(a) == t) return a;
  }
  throw OrbitError(ErrorKind::UnknownAlgebra,
                   "'" + std::string(text) + "' is not one of G2, F4, E6, E7, E8");
}

std::span<const ExceptionalRecord> exceptional_database() {
  using A = ExceptionalAlgebra;
  static constexpr std::string_view simply_connected =
      "non-even Richardson, simply connected: every polarization gives a resolution";
  static constexpr std::string_view trivial_component_group =
      "non-even Richardson with trivial component group";
  static constexpr std::string_view open_case =
      "non-even Richardson with component group S2: open";
  static constexpr std::array<ExceptionalRecord, 18> table{{
      {A::F4, "C3", Answer::Yes, "the only non-even Richardson orbit in F4"},
      {A::E6, "2A1", Answer::Yes, simply_connected},
      {A::E6, "A2+2A1", Answer::Yes, simply_connected},
      {A::E6, "A3", Answer::Yes, simply_connected},
      {A::E6, "A4+A1", Answer::Yes, simply_connected},
      {A::E6, "D5(a1)", Answer::Yes, simply_connected},
      {A::E7, "D5+A1", Answer::Yes, trivial_component_group},
      {A::E7, "D6(a1)", Answer::Yes, trivial_component_group},
      {A::E7, "D4(a1)+A1", Answer::Unknown, open_case},
      {A::E7, "A4+A1", Answer::Unknown, open_case},
      {A::E7, "D5(a1)", Answer::Unknown, open_case},
      {A::E8, "A4+A2+A1", Answer::Yes, trivial_component_group},
      {A::E8, "A6+A1", Answer::Yes, trivial_component_group},
      {A::E8, "E7(a1)", Answer::Yes, trivial_component_group},
      {A::E8, "D6(a1)", Answer::Unknown, open_case},
      {A::E8, "D7(a2)", Answer::Unknown, open_case},
      {A::E8, "E6(a1)+A1", Answer::Unknown, open_case},
      {A::E8, "E7(a3)", Answer::Unknown, open_case},
  }};
  return table;
}

std::string normalize_bala_carter(std::string_view label) {
  // UTF-8 subscript digits are E2 82 80..89.
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(label[i]);
    if (ch == 0xE2 && i + 2 < label.size() && static_cast<unsigned char>(label[i + 1]) == 0x82) {
      unsigned char last = static_cast<unsigned char>(label[i + 2]);
      if (last >= 0x80 && last <= 0x89) {
        out += static_cast<char>('0' + (last - 0x80));
        i += 2;
        continue;
      }
    }
    if (std::isspace(ch)) continue;
    out += static_cast<char>(ch);
  }
  return out;
}

std::optional<ResolutionVerdict> exceptional_verdict(ExceptionalAlgebra algebra,
                                                     std::string_view label) {
  const std::string key = normalize_bala_carter(label);
  for (const auto& rec : exceptional_database()) {
    if (rec.algebra == algebra && rec.label == key) {
      return ResolutionVerdict{rec.verdict, std::nullopt, Route::ExceptionalLookup, false};
    }
  }
  return std::nullopt;
}

std::optional<ResolutionVerdict> exceptional_verdict(std::string_view algebra,
                                                     std::string_view label) {
  return exceptional_verdict(parse_exceptional_algebra(algebra), label);
}

}  // namespace orbitres
