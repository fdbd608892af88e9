#include "orbitres/report.hpp"

#include <sstream>

namespace orbitres {

using nlohmann::json;

namespace {

json bound_to_json(const IndexBound& b) {
  if (b.kind == IndexBound::Kind::Finite) return b.value;
  return b.to_string();
}

IndexBound bound_from_json(const json& j) {
  if (j.is_number_integer()) return IndexBound::at(j.get<int>());
  auto s = j.get<std::string>();
  if (s == "-inf") return IndexBound::neg_inf();
  if (s == "+inf") return IndexBound::pos_inf();
  throw OrbitError(ErrorKind::ParseError, "bad index bound '" + s + "'");
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::SL, Family::SP, Family::SO_ODD, Family::SO_EVEN}) {
    if (to_string(f) == s) return f;
  }
  throw OrbitError(ErrorKind::ParseError, "unknown family '" + s + "'");
}

std::string yes_no(bool flag) { return flag ? "yes" : "no"; }

std::string witnesses_to_string(const Polarizability& p) {
  std::string out;
  for (const auto& w : p.witnesses) {
    if (!out.empty()) out += ' ';
    out += "q=" + std::to_string(w.q) + ":N=" + std::to_string(w.n_p);
  }
  return out.empty() ? "-" : out;
}

std::string label_text(const ClassicalOrbit& o) {
  return o.very_even_label ? std::string(to_string(*o.very_even_label)) : "";
}

std::string factorial_text(const OrbitReport& r) {
  return r.factorial ? yes_no(*r.factorial) : "n/a";
}

}  // namespace

OrbitReport build_report(const ClassicalOrbit& orbit) {
  OrbitReport r{.orbit = orbit};
  PartitionProfile prof = profile(orbit);
  r.k = prof.k;
  r.c = prof.c;
  r.a = prof.a;
  r.b = prof.b;
  r.l = prof.l;
  r.rather_odd = prof.rather_odd;
  r.even = is_even_orbit(orbit);
  r.dimension = orbit_dimension(orbit);
  r.picard = picard(orbit);
  r.q_factorial = q_factorial_certificate(orbit);
  if (!is_zero_orbit(orbit)) r.factorial = is_factorial(orbit);
  r.polarization = polarizable(orbit);
  r.hesselink = hesselink_reports(orbit);
  r.verdict = admits_symplectic_resolution(orbit);
  return r;
}

json to_json(const AbelianGroupDescriptor& g) {
  json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = g.torsion;
  j["unresolved_extension"] =
      g.unresolved_extension
          ? json{{"kernel_exponent", g.unresolved_extension->kernel_exponent}}
          : json(nullptr);
  j["trivial"] = g.is_trivial();
  return j;
}

AbelianGroupDescriptor abelian_group_from_json(const json& j) {
  AbelianGroupDescriptor g;
  g.free_rank = j.at("free_rank").get<int>();
  g.torsion = j.at("torsion").get<std::vector<int>>();
  const auto& ext = j.at("unresolved_extension");
  if (!ext.is_null()) g.unresolved_extension = UnresolvedExtension{ext.at("kernel_exponent")};
  return g;
}

json to_json(const HesselinkReport& r) {
  return json{{"q", r.q},
              {"J", r.J.head},
              {"J_tail_from", r.J.tail_from},
              {"j1", bound_to_json(r.j1)},
              {"j0", bound_to_json(r.j0)},
              {"B", r.B},
              {"in_image", r.in_image},
              {"u", r.u.to_string()},
              {"N_P", r.n_p ? json(*r.n_p) : json(nullptr)}};
}

HesselinkReport hesselink_report_from_json(const json& j) {
  HesselinkReport r;
  r.q = j.at("q");
  r.J.head = j.at("J").get<std::vector<int>>();
  r.J.tail_from = j.at("J_tail_from");
  r.j1 = bound_from_json(j.at("j1"));
  r.j0 = bound_from_json(j.at("j0"));
  r.B = j.at("B").get<std::vector<int>>();
  r.in_image = j.at("in_image");
  r.u = Rational::parse(j.at("u").get<std::string>());
  if (!j.at("N_P").is_null()) r.n_p = j.at("N_P").get<std::uint64_t>();
  return r;
}

json to_json(const ResolutionVerdict& v) {
  json witness = nullptr;
  if (v.witness) {
    if (auto* q = std::get_if<QWitness>(&*v.witness)) witness = json{{"q", q->q}};
    if (auto* p = std::get_if<PairWitness>(&*v.witness)) witness = json{{"pair_position", p->k}};
  }
  return json{{"answer", std::string(to_string(v.answer))},
              {"route", std::string(to_string(v.route))},
              {"witness", witness},
              {"cross_checked", v.cross_checked}};
}

ResolutionVerdict verdict_from_json(const json& j) {
  ResolutionVerdict v;
  v.answer = parse_answer(j.at("answer").get<std::string>());
  v.route = parse_route(j.at("route").get<std::string>());
  v.cross_checked = j.at("cross_checked");
  const auto& w = j.at("witness");
  if (w.contains("q")) v.witness = QWitness{w.at("q")};
  if (w.contains("pair_position")) v.witness = PairWitness{w.at("pair_position")};
  return v;
}

json to_json(const OrbitReport& r) {
  const ClassicalOrbit& o = r.orbit;
  json witnesses = json::array();
  for (const auto& w : r.polarization.witnesses) witnesses.push_back({{"q", w.q}, {"N_P", w.n_p}});
  json hesselink = json::array();
  for (const auto& h : r.hesselink) hesselink.push_back(to_json(h));

  return json{
      {"algebra", o.lie_type.name()},
      {"family", std::string(to_string(o.lie_type.family()))},
      {"m", o.lie_type.m()},
      {"partition", format_partition(o.partition)},
      {"parts", std::vector<int>(o.partition.parts().begin(), o.partition.parts().end())},
      {"very_even_label",
       o.very_even_label ? json(std::string(to_string(*o.very_even_label))) : json(nullptr)},
      {"profile",
       {{"k", r.k}, {"c", r.c}, {"a", r.a}, {"b", r.b}, {"l", r.l}, {"rather_odd", r.rather_odd}}},
      {"even", r.even},
      {"dimension", r.dimension},
      {"picard", to_json(r.picard)},
      {"q_factorial", std::string(to_string(r.q_factorial))},
      {"factorial", r.factorial ? json(*r.factorial) : json(nullptr)},
      {"polarizable", r.polarization.polarizable},
      {"witnesses", witnesses},
      {"hesselink", hesselink},
      {"verdict", to_json(r.verdict)},
  };
}

OrbitReport report_from_json(const json& j) {
  try {
    LieType type(family_from_string(j.at("family")), j.at("m"));
    std::optional<VeryEvenLabel> label;
    if (!j.at("very_even_label").is_null()) {
      label = parse_very_even_label(j.at("very_even_label").get<std::string>());
    }
    auto parts = j.at("parts").get<std::vector<int>>();
    OrbitReport r{.orbit = validate_orbit(type, parts, label)};

    const auto& prof = j.at("profile");
    r.k = prof.at("k");
    r.c = prof.at("c");
    r.a = prof.at("a");
    r.b = prof.at("b");
    r.l = prof.at("l");
    r.rather_odd = prof.at("rather_odd");
    r.even = j.at("even");
    r.dimension = j.at("dimension");
    r.picard = abelian_group_from_json(j.at("picard"));
    r.q_factorial = j.at("q_factorial").get<std::string>() == "certified"
                        ? QFactorialCertificate::Certified
                        : QFactorialCertificate::NotCertified;
    if (!j.at("factorial").is_null()) r.factorial = j.at("factorial").get<bool>();
    r.polarization.polarizable = j.at("polarizable");
    for (const auto& w : j.at("witnesses")) {
      r.polarization.witnesses.push_back({w.at("q"), w.at("N_P")});
    }
    for (const auto& h : j.at("hesselink")) r.hesselink.push_back(hesselink_report_from_json(h));
    r.verdict = verdict_from_json(j.at("verdict"));
    return r;
  } catch (const json::exception& e) {
    throw OrbitError(ErrorKind::ParseError, std::string("malformed report JSON: ") + e.what());
  }
}

json exceptional_database_json() {
  json rows = json::array();
  for (const auto& rec : exceptional_database()) {
    rows.push_back({{"algebra", std::string(to_string(rec.algebra))},
                    {"label", std::string(rec.label)},
                    {"verdict", std::string(to_string(rec.verdict))},
                    {"note", std::string(rec.note)}});
  }
  return rows;
}

std::string format_witness(const std::optional<Witness>& w) {
  if (!w) return "-";
  if (auto* q = std::get_if<QWitness>(&*w)) return "q=" + std::to_string(q->q);
  return "k=" + std::to_string(std::get<PairWitness>(*w).k);
}

std::string format_report_text(const OrbitReport& r) {
  const ClassicalOrbit& o = r.orbit;
  std::ostringstream out;
  out << "algebra:       " << o.lie_type.name() << '\n';
  out << "partition:     [" << format_partition(o.partition) << "]";
  if (o.very_even_label) out << " (very even, label " << to_string(*o.very_even_label) << ")";
  out << '\n';
  out << "profile:       k=" << r.k << " c=" << r.c << " a=" << r.a << " b=" << r.b
      << " l=" << r.l << " rather_odd=" << yes_no(r.rather_odd) << '\n';
  out << "even:          " << yes_no(r.even) << '\n';
  out << "dimension:     " << r.dimension << '\n';
  out << "Pic:           " << r.picard.to_string() << '\n';
  out << "Q-factorial:   " << to_string(r.q_factorial) << '\n';
  out << "factorial:     " << factorial_text(r) << '\n';
  out << "polarizable:   " << yes_no(r.polarization.polarizable);
  if (!r.polarization.witnesses.empty()) out << " (" << witnesses_to_string(r.polarization) << ")";
  out << '\n';
  for (const auto& h : r.hesselink) {
    out << "  q=" << h.q << ": j1=" << h.j1.to_string() << " j0=" << h.j0.to_string()
        << " u=" << h.u.to_string() << " in_image=" << yes_no(h.in_image);
    if (h.n_p) out << " N(P)=" << *h.n_p;
    out << '\n';
  }
  out << "resolution:    " << to_string(r.verdict.answer) << " (route " << to_string(r.verdict.route)
      << ", witness " << format_witness(r.verdict.witness)
      << (r.verdict.cross_checked ? ", cross-checked" : "") << ")\n";
  return out.str();
}

std::string format_atlas_markdown(const LieType& type, const std::vector<OrbitReport>& rows) {
  std::ostringstream out;
  out << "# Nilpotent orbits of " << type.name() << "\n\n";
  out << "| partition | label | dim | even | Pic | Q-factorial | factorial | polarizable "
         "| resolution | witness |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << format_partition(r.orbit.partition) << " | " << label_text(r.orbit) << " | "
        << r.dimension << " | " << yes_no(r.even) << " | " << r.picard.to_string() << " | "
        << to_string(r.q_factorial) << " | " << factorial_text(r) << " | "
        << yes_no(r.polarization.polarizable) << " | " << to_string(r.verdict.answer) << " | "
        << format_witness(r.verdict.witness) << " |\n";
  }
  return out.str();
}

std::string format_atlas_csv(const std::vector<OrbitReport>& rows) {
  std::ostringstream out;
  out << "algebra,partition,label,dimension,even,k,c,a,b,l,rather_odd,picard,q_factorial,"
         "factorial,polarizable,witnesses,resolution,route,witness\n";
  for (const auto& r : rows) {
    out << r.orbit.lie_type.name() << ",\"" << format_partition(r.orbit.partition) << "\","
        << label_text(r.orbit) << ',' << r.dimension << ',' << yes_no(r.even) << ',' << r.k << ','
        << r.c << ',' << r.a << ',' << r.b << ',' << r.l << ',' << yes_no(r.rather_odd) << ",\""
        << r.picard.to_string() << "\"," << to_string(r.q_factorial) << ',' << factorial_text(r)
        << ',' << yes_no(r.polarization.polarizable) << ",\""
        << witnesses_to_string(r.polarization) << "\"," << to_string(r.verdict.answer) << ','
        << to_string(r.verdict.route) << ',' << format_witness(r.verdict.witness) << '\n';
  }
  return out.str();
}

json format_atlas_json(const LieType& type, const std::vector<OrbitReport>& rows) {
  json out{{"algebra", type.name()}, {"count", rows.size()}, {"rows", json::array()}};
  for (const auto& r : rows) out["rows"].push_back(to_json(r));
  return out;
}

}  // namespace orbitres
