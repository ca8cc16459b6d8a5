#include <doctest.h>

#include "varproj/json_io.hpp"
#include "varproj/verify.hpp"

using namespace varproj;

TEST_CASE("every suite passes at the default seed") {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    const SuiteReport r = run_suite(name, 42);
    CHECK_MESSAGE(r.ok(), name);
    CHECK(r.cases.size() > 0);
    CHECK(r.inconclusive() == 0);
  }
}

TEST_CASE("summaries are byte-identical for a fixed seed") {
  CHECK(to_json(run_suite("ball-coderiv", 9)).dump() == to_json(run_suite("ball-coderiv", 9)).dump());
  CHECK(to_json(run_suite("cone-l2", 9)).dump() == to_json(run_suite("cone-l2", 9)).dump());
}

TEST_CASE("cases come out sorted by id") {
  const SuiteReport r = run_suite("all", 3);
  for (std::size_t i = 1; i < r.cases.size(); ++i) CHECK(r.cases[i - 1].id <= r.cases[i].id);
  std::size_t parts = 0;
  for (const auto& name : suite_names()) {
    if (name != "all") parts += run_suite(name, 3).cases.size();
  }
  CHECK(r.cases.size() == parts);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suite("nope", 1), std::invalid_argument);
}
