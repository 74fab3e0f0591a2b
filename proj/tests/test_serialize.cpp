#include "abideal/serialize.hpp"

#include "doctest.h"

using namespace abideal;

TEST_CASE("ideal records round-trip") {
  RootSystem b3 = RootSystem::build(Series::B, 3);
  for (const Ideal& i : enumerate_abelian(b3)) {
    json rec = ideal_record(b3, i);
    CHECK(rec.contains("phi"));
    CHECK(rec.contains("w"));
    CHECK(rec["dim"] == i.dim());
    Ideal back = ideal_from_json(b3, rec);
    CHECK(back == i);
    // w record parses back to the encoding data
    Coroot tau = coroot_from_json(b3, rec["w"]["tau"]);
    CHECK(tau == w_of_ideal(b3, i).tau);
  }
}

TEST_CASE("root parsing rejects non-roots") {
  RootSystem a2 = RootSystem::build(Series::A, 2);
  CHECK_THROWS_AS(root_from_json(a2, json::array({5, 5})), std::invalid_argument);
  CHECK_THROWS_AS(root_from_json(a2, json::array({1})), std::invalid_argument);
  CHECK(root_from_json(a2, json::array({1, 1})) == a2.theta());
}

TEST_CASE("csv escaping") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("xpoint records carry chain labels") {
  RootSystem e6 = RootSystem::build(Series::E, 6);
  auto xs = enumerate_X(e6);
  json rec = xpoint_record(e6, xs[2]);
  CHECK(rec["k"] == 2);
  CHECK(rec["chain"].size() == 2);
  CHECK(rec["chain"][1]["type"] == "A5");
}
