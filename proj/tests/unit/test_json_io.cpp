#include <doctest.h>

#include "rorc/json_io.hpp"
#include "support.hpp"

using namespace rorc;

TEST_CASE("rational matrices round-trip with fractional entries") {
  const DimensionVector d({1, 2});
  RationalMatrix a = RationalMatrix::zero(Rationals{}, 3);
  a.at(0, 1) = mpq_class(-3, 4);
  a.set(0, 2, 5);
  const Json j = matrix_to_json(a, d);
  CHECK(j["n"] == 3);
  CHECK(j["field"] == "Q");
  CHECK(j["d"] == Json::array({1, 2}));
  CHECK(j["entries"][0][1] == "-3/4");
  CHECK(j["entries"][0][2] == 5);
  const BlockMatrix back = matrix_from_json(j);
  CHECK(back.d == d);
  CHECK(std::get<RationalMatrix>(back.matrix) == a);
}

TEST_CASE("modular matrices round-trip") {
  const DimensionVector d({2, 1});
  ModularMatrix a = ModularMatrix::zero(PrimeField(7), 3);
  a.set(0, 2, 6);
  a.set(1, 2, 3);
  const Json j = matrix_to_json(a, d);
  CHECK(j["field"] == "Fp:7");
  const BlockMatrix back = matrix_from_json(Json::parse(j.dump()));
  CHECK(std::get<ModularMatrix>(back.matrix) == a);
}

TEST_CASE("sparse input and field defaults") {
  const Json j = Json::parse(R"({"d": [1, 1, 1], "sparse": [[1, 2, 1], [2, 3, "2/3"]]})");
  const BlockMatrix m = matrix_from_json(j);
  const auto& a = std::get<RationalMatrix>(m.matrix);
  CHECK(a.at(0, 1) == 1);
  CHECK(a.at(1, 2) == mpq_class(2, 3));
  const Json fp = Json::parse(R"({"d": [1, 1], "field": "Fp:5", "sparse": [[1, 2, -1]]})");
  CHECK(std::get<ModularMatrix>(matrix_from_json(fp).matrix).at(0, 1) == 4);
}

TEST_CASE("malformed matrix JSON is rejected") {
  for (const char* text : {
           R"([1, 2])",
           R"({"entries": [[0]]})",
           R"({"d": [1, 1]})",
           R"({"d": [1, 1], "n": 3, "entries": [[0, 0], [0, 0]]})",
           R"({"d": [1, 1], "entries": [[0, 0]]})",
           R"({"d": [1, 1], "entries": [[0, 0], [0]]})",
           R"({"d": [1, 1], "entries": [[0, "x"], [0, 0]]})",
           R"({"d": [1, 1], "field": "Fp:5", "entries": [[0, "1/2"], [0, 0]]})",
           R"({"d": [1, 1], "field": "R", "entries": [[0, 1], [0, 0]]})",
           R"({"d": [1, 1], "field": "Fp:6", "entries": [[0, 1], [0, 0]]})",
           R"({"d": [1, 1], "sparse": [[3, 1, 1]]})",
           R"({"d": [1, 1], "sparse": [[1, 1]]})",
           R"({"d": [0, 2], "sparse": []})",
       }) {
    CAPTURE(text);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(text)), JsonFormatError);
  }
}

TEST_CASE("tableau JSON") {
  const YoungTableau t = t_of_d(DimensionVector({2, 1, 2}));
  const Json j = tableau_to_json(t);
  CHECK(j.dump() == R"({"rows":[[1,2,3],[1,3]],"shape":[3,2]})");
  CHECK(tableau_from_json(j) == t);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"shape": [2], "rows": [[1, 2, 3]]})")), JsonFormatError);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"rows": [[2, 1]]})")), JsonFormatError);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"shape": [1]})")), JsonFormatError);
}

TEST_CASE("decomposition JSON") {
  const Json j = decomposition_to_json(decompose(DimensionVector({1, 1, 2, 1})));
  CHECK(j["lambda"] == Json::array({4, 1}));
  REQUIRE(j["components"].size() == 2);
  CHECK(j["components"][0]["pair"] == Json::array({1, 2}));
  CHECK(j["components"][1]["pair"] == Json::array({2, 4}));
  for (const auto& c : j["components"]) {
    CHECK(c.contains("kappa"));
    CHECK(c.contains("rank_threshold"));
    CHECK(c["tableau"]["shape"] == c["mu"]);
  }
}

TEST_CASE("report JSON echoes the configuration") {
  ExperimentConfig cfg;
  cfg.d = DimensionVector({2, 2});
  cfg.trials = 7;
  cfg.seed = 3;
  const Json j = report_to_json(check_theorem_sampled(cfg));
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["config"] == Json::parse(R"({"d":[2,2],"mode":"sample","field":"Fp:32003","trials":7,"seed":3,"dim_cap":20})"));
  CHECK(j["checks"][0]["name"] == "theorem");
  CHECK(j["checks"][0]["violations"] == Json::array());
}

TEST_CASE("violation matrices carry their own block sizes") {
  const DimensionVector d({1, 2, 2});
  VerificationReport report{ExperimentConfig{}, {}, std::nullopt};
  CheckResult c;
  c.name = "example";
  c.add_violation("detail", ExactMatrix(oracle::rational(d, {{1, 2}})));
  c.violations.front().blocks = d.parts();
  report.checks.push_back(c);
  const Json j = report_to_json(report);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][0]["violations"][0]["matrix"]["d"] == Json::array({1, 2, 2}));
  CHECK(matrix_from_json(j["checks"][0]["violations"][0]["matrix"]).d == d);
}
