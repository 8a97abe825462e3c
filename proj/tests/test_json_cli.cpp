#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gasket/experiments.hpp"
#include "gasket/json_io.hpp"

using namespace gasket;

TEST_CASE("harmonic json round trip") {
  const Harmonic h(Rat(1), make_rat(-2, 3), Rat(0));
  const auto j = harmonic_to_json(h);
  CHECK(j["corners"][1] == "-2/3");
  CHECK(harmonic_from_json(j) == h);
}

TEST_CASE("piecewise json round trip") {
  const Piecewise u = Piecewise::loop_potential(Word("0"));
  const auto j = piecewise_to_json(u);
  CHECK(j["level"] == 2);
  CHECK(piecewise_from_json(j) == u);
  CHECK(piecewise_from_json(nlohmann::json::parse(j.dump())) == u);
}

TEST_CASE("oneform json round trip") {
  LoopSet ls;
  ls.finite[Word("1")] = make_rat(3, 5);
  ls.rays.push_back(GeometricRay{Word("2"), 2, Rat(1), make_rat(-1, 5)});
  const OneForm w(Piecewise(Harmonic(Rat(0), Rat(1), Rat(1))), ls);
  const auto j = oneform_to_json(w);
  const OneForm back = oneform_from_json(j);
  CHECK(back.norm_sq() == w.norm_sq());
  CHECK(back.loops().finite.at(Word("1")) == make_rat(3, 5));
  REQUIRE(back.loops().rays.size() == 1);
  CHECK(back.loops().rays[0].ratio == make_rat(-1, 5));
}

TEST_CASE("oneform json rejects double-booked words") {
  const auto j = nlohmann::json::parse(R"({
    "exact": {"level": 0, "pieces": {"": {"corners": ["0", "0", "0"]}}},
    "loops": {"finite": {"00": "1"},
              "rays": [{"base": "", "dir": 0, "a": "1", "phi": "1/5"}]}
  })");
  CHECK_THROWS_AS(oneform_from_json(j), std::invalid_argument);
}

TEST_CASE("report serialization") {
  const auto rep = exp_sides(Harmonic(Rat(0), Rat(1), Rat(1)), Rat(1),
                             res_scale(), 4);
  const auto j = report_to_json(rep);
  CHECK(j["name"] == "sides");
  CHECK(j["verdict"] == "pass");
  CHECK(j["limit"] == "15/2");
  CHECK(j["sequence"][1][1] == "5");
  const std::string csv = report_to_csv(rep);
  CHECK(csv.rfind("m,value_num,value_den,limit,residual\n", 0) == 0);
  CHECK(csv.find("1,5,1,15/2,") != std::string::npos);
}
