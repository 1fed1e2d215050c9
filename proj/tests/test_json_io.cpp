#include <doctest.h>

#include "shorttoric/error.hpp"
#include "shorttoric/json_io.hpp"

using namespace shorttoric;

TEST_CASE("poset json round trip is canonical") {
  Poset p = polygon_lattice(5);
  json j = poset_to_json(p);
  Poset q = poset_from_json(j);
  CHECK(poset_to_json(q) == j);
  CHECK(are_isomorphic(p, q));
  CHECK(j.at("elements").size() == 12);
  // elements come out sorted by (rank, label)
  CHECK(j.at("elements")[0] == "bottom");
  CHECK(j.at("ranks").at("top") == 3);
}

TEST_CASE("poset json accepts explicit ranks and rejects bad input") {
  json j = json::parse(R"({"elements":["a","b"],"covers":[["a","b"]],"ranks":{"a":0,"b":1}})");
  Poset p = poset_from_json(j);
  CHECK(p.size() == 2);
  json bad = json::parse(R"({"covers":[["a","b"]],"ranks":{"a":0,"b":2}})");
  CHECK_THROWS_AS(poset_from_json(bad), error);
  json loop = json::parse(R"({"covers":[["a","b"],["b","a"]]})");
  CHECK_THROWS_AS(poset_from_json(loop), error);
}

TEST_CASE("laurent json uses descending exponent triples") {
  LaurentPoly p;
  p.add_term(3, Rational(1));
  p.add_term(1, Rational(5));
  p.add_term(-2, make_rational(-1, 2));
  json j = laurent_to_json(p);
  CHECK(j == json::parse("[[3,1,1],[1,5,1],[-2,-1,2]]"));
  CHECK(laurent_from_json(j) == p);
  CHECK(laurent_to_json(LaurentPoly::zero()) == json::array());
}

TEST_CASE("flag and nc json shapes") {
  json f = flag_to_json(flag_f(boolean_algebra(3)));
  CHECK(f.at("n") == 2);
  CHECK(f.at("kind") == "F");
  CHECK(f.at("values").at("3") == json::parse("[6,1]"));

  json phi = nc_to_json(cd_index(boolean_algebra(3)));
  CHECK(phi.at("alphabet") == "CD");
  CHECK(phi.at("terms").at("cc") == json::parse("[1,1]"));
  CHECK(phi.at("terms").at("d") == json::parse("[1,1]"));
}
