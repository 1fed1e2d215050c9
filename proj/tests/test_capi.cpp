#include <doctest.h>

#include <string>

#include <json.hpp>

#include "shorttoric.h"

using nlohmann::json;

namespace {

struct Text {
  char* p = nullptr;
  ~Text() { st_text_free(p); }
  std::string str() const { return p ? std::string(p) : ""; }
};

struct Handle {
  st_poset* p = nullptr;
  ~Handle() { st_poset_free(p); }
};

}  // namespace

TEST_CASE("generate and inspect through the C surface") {
  Handle h;
  REQUIRE(st_poset_generate("boolean", 4, &h.p) == ST_OK);
  CHECK(st_poset_size(h.p) == 16);
  CHECK(st_poset_rank(h.p) == 4);

  Handle cube;
  REQUIRE(st_poset_generate("cube", 3, &cube.p) == ST_OK);
  CHECK(st_poset_size(cube.p) == 28);

  Handle bogus;
  CHECK(st_poset_generate("dodecahedron", 3, &bogus.p) == ST_ERR_UNKNOWN_FAMILY);
  CHECK(std::string(st_last_error_message()).find("dodecahedron") != std::string::npos);
  CHECK(st_poset_generate("cube", -1, &bogus.p) == ST_ERR_PARAMETER_OUT_OF_RANGE);
}

TEST_CASE("canonical json round trip") {
  Handle h;
  REQUIRE(st_poset_generate("polygon", 5, &h.p) == ST_OK);
  Text text;
  REQUIRE(st_poset_canonical_json(h.p, &text.p) == ST_OK);
  json j = json::parse(text.str());
  CHECK(j.at("elements").size() == 12);

  Handle back;
  REQUIRE(st_poset_parse_json(text.str().c_str(), &back.p) == ST_OK);
  Text text2;
  REQUIRE(st_poset_canonical_json(back.p, &text2.p) == ST_OK);
  CHECK(text.str() == text2.str());

  Handle broken;
  CHECK(st_poset_parse_json("{\"covers\": [[\"a\",\"b\"],[\"b\",\"a\"]]}", &broken.p) ==
        ST_ERR_CYCLE_DETECTED);
  CHECK(st_poset_parse_json("not json", &broken.p) == ST_ERR_PARSE);
}

TEST_CASE("compute invariants") {
  Handle cube;
  REQUIRE(st_poset_generate("cube", 3, &cube.p) == ST_OK);
  Text st;
  REQUIRE(st_poset_compute(cube.p, "st", &st.p) == ST_OK);
  CHECK(json::parse(st.str()) == json::parse("[[3,1,1],[1,5,1]]"));

  Text h;
  REQUIRE(st_poset_compute(cube.p, "toric-h", &h.p) == ST_OK);
  CHECK(json::parse(h.str()) == json::parse("[1,5,5,1]"));

  Text cd;
  REQUIRE(st_poset_compute(cube.p, "cd-index", &cd.p) == ST_OK);
  json jcd = json::parse(cd.str());
  CHECK(jcd.at("alphabet") == "CD");
  CHECK(jcd.at("terms").at("ccc") == json::parse("[1,1]"));
  CHECK(jcd.at("terms").at("dc") == json::parse("[6,1]"));

  Text bad;
  CHECK(st_poset_compute(cube.p, "zeta", &bad.p) == ST_ERR_INVALID_ARGUMENT);

  // a chain is not Eulerian; the witness interval is reported
  Handle ch;
  REQUIRE(st_poset_generate("chain", 3, &ch.p) == ST_OK);
  Text cd2;
  CHECK(st_poset_compute(ch.p, "cd-index", &cd2.p) == ST_ERR_NOT_EULERIAN);
  CHECK(std::string(st_last_error_message()).find("interval") != std::string::npos);
}

TEST_CASE("dual through the C surface") {
  Handle cube;
  REQUIRE(st_poset_generate("cube", 2, &cube.p) == ST_OK);
  Handle d;
  REQUIRE(st_poset_dual(cube.p, &d.p) == ST_OK);
  CHECK(st_poset_size(d.p) == st_poset_size(cube.p));
  Text a, b;
  REQUIRE(st_poset_compute(cube.p, "cd-index", &a.p) == ST_OK);
  REQUIRE(st_poset_compute(d.p, "cd-index", &b.p) == ST_OK);
  CHECK(json::parse(a.str()) == json::parse(b.str()));  // the square is self-dual
}

TEST_CASE("suites through the C surface") {
  Text out;
  int pass = 0;
  REQUIRE(st_run_suite("bases", 6, &out.p, &pass) == ST_OK);
  CHECK(pass == 1);
  json j = json::parse(out.str());
  CHECK(j.at("suite") == "bases");
  CHECK(j.at("passed") == true);
  CHECK(j.at("checks").size() > 0);
  for (const auto& c : j.at("checks")) CHECK(c.at("status") == "pass");

  Text bad;
  CHECK(st_run_suite("nonsense", 0, &bad.p, &pass) == ST_ERR_UNKNOWN_FAMILY);
}

TEST_CASE("status names") {
  CHECK(std::string(st_status_name(ST_OK)) == "OK");
  CHECK(std::string(st_status_name(ST_ERR_NOT_EULERIAN)) == "NotEulerian");
  CHECK(std::string(st_status_name(ST_ERR_ODD_E_WORD_PRESENT)) == "OddEWordPresent");
}

TEST_CASE("suite reports are byte identical across runs") {
  Text a, b;
  int pass = 0;
  REQUIRE(st_run_suite("gessel", 5, &a.p, &pass) == ST_OK);
  REQUIRE(st_run_suite("gessel", 5, &b.p, &pass) == ST_OK);
  CHECK(a.str() == b.str());
}
