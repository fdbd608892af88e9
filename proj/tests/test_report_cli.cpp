#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "orbitres/cli.hpp"
#include "orbitres/enumeration.hpp"
#include "orbitres/report.hpp"

using namespace orbitres;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report fields come from the owning modules") {
  auto o = validate_orbit(LieType(Family::SO_ODD, 7), std::vector{3, 2, 2});
  OrbitReport r = build_report(o);
  CHECK(r.k == profile(o).k);
  CHECK(r.dimension == orbit_dimension(o));
  CHECK(r.picard == picard(o));
  CHECK(r.factorial == is_factorial(o));
  CHECK(r.polarization == polarizable(o));
  CHECK(r.hesselink == hesselink_reports(o));
  CHECK(r.verdict == admits_symplectic_resolution(o));

  auto zero = build_report(validate_orbit(LieType(Family::SP, 4), std::vector{1, 1, 1, 1}));
  CHECK_FALSE(zero.factorial.has_value());
}

TEST_CASE("JSON serialization shapes") {
  AbelianGroupDescriptor g{1, {2, 2}, std::nullopt};
  CHECK(to_json(g) == json::parse(R"({"free_rank":1,"torsion":[2,2],
                                      "unresolved_extension":null,"trivial":false})"));
  AbelianGroupDescriptor ext{0, {}, UnresolvedExtension{3}};
  CHECK(to_json(ext)["unresolved_extension"] == json{{"kernel_exponent", 3}});

  ResolutionVerdict v{Answer::Yes, PairWitness{2}, Route::ClosedForm, true};
  CHECK(to_json(v) == json::parse(R"({"answer":"yes","route":"closed_form",
                                      "witness":{"pair_position":2},"cross_checked":true})"));
  ResolutionVerdict none{Answer::No, std::nullopt, Route::ClosedForm, true};
  CHECK(to_json(none)["witness"].is_null());

  HesselinkReport h = hesselink_report({7, 0}, Partition({3, 2, 2}), 1);
  json hj = to_json(h);
  CHECK(hj["j1"] == "-inf");
  CHECK(hj["j0"] == 2);
  CHECK(hj["u"] == "0");
  CHECK(hj["N_P"] == 1);
  HesselinkReport h2 = h;
  h2.j0 = IndexBound::pos_inf();
  CHECK(to_json(h2)["j0"] == "+inf");
  CHECK(hesselink_report_from_json(to_json(h2)) == h2);
}

TEST_CASE("report JSON round-trips for every orbit with m <= 12") {
  for (const LieType& type : classical_types_up_to(12)) {
    for (const auto& o : enumerate_orbits(type)) {
      OrbitReport r = build_report(o);
      json j = to_json(r);
      CHECK(report_from_json(json::parse(j.dump())) == r);
    }
  }
  CHECK_THROWS_AS(report_from_json(json{{"family", "SL"}}), OrbitError);
}

TEST_CASE("cli report") {
  Run r = run({"report", "so7", "3,2,2", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"]["answer"] == "yes");
  CHECK(j["verdict"]["witness"]["q"] == 1);
  CHECK(j["partition"] == "3,2^2");

  r = run({"report", "sp6", "4,1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["verdict"]["answer"] == "no");
  CHECK(j["polarizable"] == false);

  r = run({"report", "sl3", "1,1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["picard"]["trivial"] == true);
  CHECK(j["verdict"]["answer"] == "yes");
  CHECK(j["dimension"] == 0);

  r = run({"report", "D4", "2^4", "--label", "II"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("label II") != std::string::npos);
  CHECK(r.out.find("resolution:    yes") != std::string::npos);

  r = run({"report", "so7", "3,2,2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness q=1") != std::string::npos);
}

TEST_CASE("cli input errors exit with 2") {
  CHECK(run({"report", "so8", "4,2,1,1"}).code == cli::kExitInputError);
  CHECK(run({"report", "so8", "4,2,1,1"}).err.find("ParityMultiplicityViolation") !=
        std::string::npos);
  CHECK(run({"report", "so8", "4,x"}).code == cli::kExitInputError);
  CHECK(run({"report", "sx8", "4,4"}).code == cli::kExitInputError);
  CHECK(run({"report", "so8", "4,4", "--format", "yaml"}).code == cli::kExitInputError);
  CHECK(run({"report", "sp8", "4,4", "--label", "I"}).code == cli::kExitInputError);
  CHECK(run({"atlas", "so8", "--format", "pdf"}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({}).code == cli::kExitInputError);
  CHECK(run({"selfcheck", "1"}).code == cli::kExitInputError);
  CHECK(run({"exceptional", "E9", "A1"}).code == cli::kExitInputError);
}

TEST_CASE("cli atlas") {
  Run r = run({"atlas", "so8", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 12);
  CHECK(j["count"] == 12);
  std::vector<std::string> no;
  for (const auto& row : j["rows"]) {
    if (row["verdict"]["answer"] == "no") no.push_back(row["partition"]);
  }
  CHECK(no == std::vector<std::string>{"3,2^2,1", "2^2,1^4"});

  r = run({"atlas", "so7", "--format", "json"});
  j = json::parse(r.out);
  no.clear();
  for (const auto& row : j["rows"]) {
    if (row["verdict"]["answer"] == "no") no.push_back(row["partition"]);
  }
  CHECK(no == std::vector<std::string>{"2^2,1^3"});

  r = run({"atlas", "sl4", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) {
    ++rows;
    if (rows > 0) CHECK(line.find(",yes,always_sln,") != std::string::npos);
  }
  CHECK(rows == 5);

  r = run({"atlas", "sp6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("| 4,1^2 |") != std::string::npos);

  for (const auto& name : {"sl6", "sp8", "so9", "so10"}) {
    json atlas = json::parse(run({"atlas", name, "--format", "json"}).out);
    CHECK(atlas["rows"].size() == static_cast<std::size_t>(count_orbits(parse_lie_type(name))));
  }
}

TEST_CASE("cli selfcheck") {
  Run r = run({"selfcheck", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find(": 4 orbits") != std::string::npos);

  r = run({"selfcheck", "--max-m", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no resolution: so8 [3,2^2,1]") != std::string::npos);
  CHECK(r.out.find("no resolution: so8 [2^2,1^4]") != std::string::npos);
  CHECK(r.out.find(" 0 failures") != std::string::npos);
}

TEST_CASE("cli exceptional") {
  CHECK(run({"exceptional", "E6", "A4+A1"}).out == "yes\n");
  CHECK(run({"exceptional", "E7", "D4(a1)+A1"}).out == "unknown\n");
  CHECK(run({"exceptional", "E8", "E7(a1)"}).out == "yes\n");
  Run r = run({"exceptional", "G2", "G2(a1)"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("not in database"));
  json j = json::parse(run({"exceptional", "E8", "D7(a2)", "--format", "json"}).out);
  CHECK(j["answer"] == "unknown");
  CHECK(j["route"] == "exceptional_lookup");

  json db = json::parse(run({"exceptional"}).out);
  CHECK(db.size() == 18);
}
