#include "abideal/verify.hpp"

#include <iostream>

#include "doctest.h"

using namespace abideal;

namespace {

void expect_all_pass(Series s, int n) {
  RootSystem sys = RootSystem::build(s, n);
  Report r = verify_all(sys);
  for (const Check& c : r.checks) {
    INFO(sys.name(), " ", c.anchor, ": ", c.description, " :: ", c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("verification suites pass on small systems") {
  expect_all_pass(Series::A, 1);
  expect_all_pass(Series::A, 3);
  expect_all_pass(Series::B, 3);
  expect_all_pass(Series::C, 3);
  expect_all_pass(Series::G, 2);
}

TEST_CASE("verification suites pass on mid-rank systems") {
  expect_all_pass(Series::D, 4);
  expect_all_pass(Series::F, 4);
  expect_all_pass(Series::A, 4);
  expect_all_pass(Series::B, 2);
}

TEST_CASE("golden table coverage matches the computed towers") {
  for (auto [s, n] : {std::pair{Series::A, 4}, {Series::B, 4}, {Series::C, 4},
                      {Series::D, 5}, {Series::F, 4}, {Series::G, 2}}) {
    RootSystem sys = RootSystem::build(s, n);
    auto rows = tower_table(sys);
    auto golden = golden_dims(sys);
    REQUIRE(!golden.empty());
    CHECK(rows.size() == golden.size());
    for (const TowerRow& r : rows) {
      auto it = golden.find({r.alpha, r.h});
      REQUIRE(it != golden.end());
      CHECK(it->second == r.dim_explicit);
      CHECK(it->second == r.dim_formula);
    }
  }
}
