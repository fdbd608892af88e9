#include "orbitres/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "orbitres/enumeration.hpp"
#include "orbitres/report.hpp"
#include "orbitres/selfcheck.hpp"

namespace orbitres::cli {

namespace {

struct Options {
  std::string algebra;
  std::string partition;
  std::string report_format;
  std::string atlas_format;
  std::string exceptional_format;
  std::string label;
  std::string bala_carter;
  int max_m = 24;
  int max_m_flag = -1;
};

int cmd_report(const Options& opt, std::ostream& out) {
  LieType type = parse_lie_type(opt.algebra);
  std::optional<VeryEvenLabel> label;
  if (!opt.label.empty()) label = parse_very_even_label(opt.label);
  OrbitReport r = build_report(validate_orbit(type, parse_parts(opt.partition), label));
  if (opt.report_format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << format_report_text(r);
  }
  return kExitOk;
}

int cmd_atlas(const Options& opt, std::ostream& out) {
  LieType type = parse_lie_type(opt.algebra);
  if (type.m() > enumeration_cap()) {
    throw OrbitError(ErrorKind::ParseError,
                     type.name() + " exceeds the enumeration cap m <= " +
                         std::to_string(enumeration_cap()) + " (set ORBITRES_MAX_M)");
  }
  std::vector<OrbitReport> rows;
  for (const auto& orbit : enumerate_orbits(type)) rows.push_back(build_report(orbit));

  if (opt.atlas_format == "json") {
    out << format_atlas_json(type, rows).dump(2) << '\n';
  } else if (opt.atlas_format == "csv") {
    out << format_atlas_csv(rows);
  } else {
    out << format_atlas_markdown(type, rows);
  }
  return kExitOk;
}

int cmd_selfcheck(const Options& opt, std::ostream& out, std::ostream& err) {
  int max_m = opt.max_m_flag >= 0 ? opt.max_m_flag : opt.max_m;
  if (max_m < 2) throw OrbitError(ErrorKind::ParseError, "selfcheck needs max_m >= 2");
  if (max_m > enumeration_cap()) {
    throw OrbitError(ErrorKind::ParseError, "max_m " + std::to_string(max_m) +
                                                " exceeds the enumeration cap " +
                                                std::to_string(enumeration_cap()));
  }
  SelfCheckSummary sum = run_selfcheck(max_m);
  out << "selfcheck up to m=" << max_m << ": " << sum.orbits_checked << " orbits ("
      << sum.bcd_orbits_checked << " of type B/C/D), " << sum.in_image_pairs
      << " polarizations, " << sum.no_verdicts << " without resolution, "
      << sum.failures.size() << " failures\n";
  for (const auto& name : sum.no_verdict_orbits) out << "  no resolution: " << name << '\n';
  for (const auto& f : sum.failures) {
    err << "FAIL " << f.check << ": " << f.orbit << ": " << f.detail << '\n';
  }
  return sum.ok() ? kExitOk : kExitSelfCheckFailed;
}

int cmd_exceptional(const Options& opt, std::ostream& out) {
  if (opt.algebra.empty()) {
    out << exceptional_database_json().dump(2) << '\n';
    return kExitOk;
  }
  ExceptionalAlgebra algebra = parse_exceptional_algebra(opt.algebra);
  if (opt.bala_carter.empty()) {
    for (const auto& rec : exceptional_database()) {
      if (rec.algebra == algebra) out << rec.label << ": " << to_string(rec.verdict) << '\n';
    }
    return kExitOk;
  }
  auto verdict = exceptional_verdict(algebra, opt.bala_carter);
  if (opt.exceptional_format == "json") {
    out << (verdict ? to_json(*verdict) : nlohmann::json{{"answer", "not_in_database"}}).dump(2)
        << '\n';
  } else if (verdict) {
    out << to_string(verdict->answer) << '\n';
  } else {
    out << kNotInDatabaseGuidance << '\n';
  }
  return kExitOk;
}

}  // namespace

int enumeration_cap() {
  if (const char* env = std::getenv("ORBITRES_MAX_M")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 2) return cap;
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxM;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent orbits of classical Lie algebras: Picard groups, factoriality, "
               "polarizations and symplectic resolutions."};
  app.require_subcommand(1);
  Options opt;

  auto* report = app.add_subcommand("report", "Full report for one orbit");
  report->add_option("algebra", opt.algebra, "sl5, sp6, so8, or A4, C3, D4, ...")->required();
  report->add_option("partition", opt.partition, "e.g. 3,2,2,1 or 3,2^2,1")->required();
  report->add_option("--format", opt.report_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("text");
  report->add_option("--label", opt.label, "very even label")->check(CLI::IsMember({"I", "II"}));

  auto* atlas = app.add_subcommand("atlas", "Report every orbit of an algebra");
  atlas->add_option("algebra", opt.algebra)->required();
  atlas->add_option("--format", opt.atlas_format, "json, md or csv")
      ->check(CLI::IsMember({"json", "md", "csv"}))
      ->default_val("md");

  auto* selfcheck = app.add_subcommand("selfcheck", "Cross-check every orbit up to max_m");
  selfcheck->add_option("max_m", opt.max_m)->default_val(24);
  selfcheck->add_option("--max-m", opt.max_m_flag);

  auto* exceptional = app.add_subcommand("exceptional", "Look up an exceptional-type orbit");
  exceptional->add_option("algebra", opt.algebra, "G2, F4, E6, E7, E8");
  exceptional->add_option("label", opt.bala_carter, "Bala-Carter label, e.g. D5(a1)+A1");
  exceptional->add_option("--format", opt.exceptional_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("text");

  std::vector<const char*> argv{"orbitres"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (report->parsed()) return cmd_report(opt, out);
    if (atlas->parsed()) return cmd_atlas(opt, out);
    if (selfcheck->parsed()) return cmd_selfcheck(opt, out, err);
    if (exceptional->parsed()) return cmd_exceptional(opt, out);
  } catch (const OrbitError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::CrossCheckMismatch ? kExitSelfCheckFailed : kExitInputError;
  }
  return kExitInputError;
}

}  // namespace orbitres::cli
