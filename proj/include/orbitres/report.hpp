#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "orbitres/hesselink.hpp"
#include "orbitres/orbit.hpp"
#include "orbitres/picard.hpp"
#include "orbitres/resolution.hpp"

namespace orbitres {

/// Everything the library knows about one classical orbit.
struct OrbitReport {
  ClassicalOrbit orbit;
  int k = 0;
  int c = 0;
  int a = 0;
  int b = 0;
  int l = 0;
  bool rather_odd = false;
  bool even = false;
  std::int64_t dimension = 0;
  AbelianGroupDescriptor picard{};
  QFactorialCertificate q_factorial = QFactorialCertificate::NotCertified;
  std::optional<bool> factorial{};  // unset for the zero orbit
  Polarizability polarization{};
  std::vector<HesselinkReport> hesselink{};
  ResolutionVerdict verdict{};

  bool operator==(const OrbitReport&) const = default;
};

OrbitReport build_report(const ClassicalOrbit& orbit);

nlohmann::json to_json(const AbelianGroupDescriptor& g);
nlohmann::json to_json(const HesselinkReport& r);
nlohmann::json to_json(const ResolutionVerdict& v);
nlohmann::json to_json(const OrbitReport& r);

AbelianGroupDescriptor abelian_group_from_json(const nlohmann::json& j);
HesselinkReport hesselink_report_from_json(const nlohmann::json& j);
ResolutionVerdict verdict_from_json(const nlohmann::json& j);
/// Throws ParseError (or a validation error if the orbit itself is invalid).
OrbitReport report_from_json(const nlohmann::json& j);

nlohmann::json exceptional_database_json();

/// Multi-line human-readable form of a single report.
std::string format_report_text(const OrbitReport& r);

/// "q=1", "k=2" or "-".
std::string format_witness(const std::optional<Witness>& w);

std::string format_atlas_markdown(const LieType& type, const std::vector<OrbitReport>& rows);
std::string format_atlas_csv(const std::vector<OrbitReport>& rows);
nlohmann::json format_atlas_json(const LieType& type, const std::vector<OrbitReport>& rows);

}  // namespace orbitres
