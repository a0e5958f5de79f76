#include <doctest.h>

#include "tlab/io.hpp"

using namespace tlab;

TEST_CASE("instance round trip") {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  const ThresholdDist k{1, 2, 0};
  const Json j = to_json(g, k);
  CHECK(j.dump() == R"({"n":3,"edges":[[0,1],[1,2]],"thresholds":[1,2,0]})");
  const InstanceFile back = parse_instance(j);
  CHECK(back.graph == g);
  CHECK(back.effective_thresholds() == k);
}

TEST_CASE("types parse as exact rationals") {
  const auto j = Json::parse(R"({"n":3,"edges":[[0,1],[1,2],[2,0]],"types":[[2,5],[2,5],[9,10]]})");
  const InstanceFile f = parse_instance(j);
  REQUIRE(f.types);
  CHECK((*f.types)[2] == Rational(9, 10));
  CHECK(f.effective_thresholds() == ThresholdDist{1, 1, 2});
  CHECK(to_json(*f.types).dump() == "[[2,5],[2,5],[9,10]]");
}

TEST_CASE("instance parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_instance(Json::parse(R"({"n":2,"edges":[[0,1]],"thresholds":[1,1],"x":1})")),
                  Error);
  CHECK_THROWS_AS(parse_instance(Json::parse(R"({"n":2,"edges":[[0,1]],"thresholds":[1]})")), Error);
  CHECK_THROWS_AS(
      parse_instance(Json::parse(R"({"n":2,"edges":[[0,1]],"thresholds":[1,1],"types":[[0,1],[0,1]]})")),
      Error);
  CHECK_THROWS_AS(parse_instance(Json::parse(R"({"n":2,"edges":[[0,2]],"thresholds":[1,1]})")), Error);
  const InstanceFile bare = parse_instance(Json::parse(R"({"n":2,"edges":[[0,1]]})"));
  CHECK_THROWS_AS(bare.effective_thresholds(), Error);
}

TEST_CASE("weighted round trip") {
  const WeightedGraph w(3, {{0, 1, 2}, {1, 2, -1}}, {0, 1, 0}, {1, 0, -2});
  const Json j = to_json(w);
  CHECK(parse_weighted(j) == w);
}

TEST_CASE("formula round trip") {
  const Formula f = make_formula(FormulaVariant::CNF3, 3, {{1, -2, 3}, {-1}});
  const Json j = to_json(f);
  CHECK(j.dump() == R"({"variant":"3cnf","n":3,"clauses":[[1,-2,3],[-1]]})");
  const Formula back = parse_formula(j);
  CHECK(back.clauses == f.clauses);
  CHECK(back.num_vars == 3);
}

TEST_CASE("limit report serialization") {
  LimitReport r;
  r.transient = 1;
  r.cycle = {ActionProfile::parse("BW"), ActionProfile::parse("WB")};
  r.trajectory_length = 3;
  CHECK(to_json(r).dump() ==
        R"({"transient":1,"cycle_length":2,"cycle":["BW","WB"],"trajectory_length":3})");
}
