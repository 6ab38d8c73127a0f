#include "doctest.h"

#include "quillen/suite.hpp"

using namespace quillen;

// Each criterion is run once with its fixture corrupted; the row must fail.
// The unfaulted runs live in the acceptance binary.
TEST_CASE("fault injection fails the corresponding row") {
  for (int id = 1; id <= 9; ++id) {
    CAPTURE(id);
    SuiteOptions opts;
    opts.only = {id};
    opts.fault = id;
    auto r = paper_suite(opts);
    REQUIRE(r.criteria.size() == 1);
    CHECK(r.criteria[0].id == id);
    CHECK_FALSE(r.criteria[0].passed);
    CHECK_FALSE(r.criteria[0].failures.empty());
    CHECK_FALSE(r.all_passed);
  }
}

TEST_CASE("a fault in one criterion does not leak into another") {
  SuiteOptions opts;
  opts.only = {9};
  opts.fault = 2;
  auto r = paper_suite(opts);
  REQUIRE(r.criteria.size() == 1);
  CHECK(r.criteria[0].passed);
}

TEST_CASE("suite JSON") {
  SuiteOptions opts;
  opts.only = {9};
  auto j = suite_to_json(paper_suite(opts));
  CHECK(j["type"] == "suite");
  CHECK(j["criteria"].size() == 1);
  CHECK(j["criteria"][0]["passed"] == true);
}

TEST_CASE("parity signature oracle") {
  CHECK(signature_by_parity({1, 4, 2}) == 1);
  CHECK(signature_by_parity({2}) == -1);
  CHECK(signature_by_parity({2, 1}) == -1);
  CHECK(signature_by_parity({}) == 1);
}
