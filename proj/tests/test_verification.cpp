#include <doctest.h>

#include <atomic>

#include "albanese/character.hpp"
#include "albanese/types.hpp"
#include "albanese/verification.hpp"

using namespace albanese;

TEST_CASE("suite names") {
  CHECK(suite_names() == std::vector<std::string>{"omega", "prop-match", "io-split", "johnson", "plethysm"});
  CHECK_THROWS_AS(run_suite("nope"), InputError);
}

TEST_CASE("run_cases keeps order and records every case") {
  std::atomic<int> calls = 0;
  std::vector<std::function<CaseResult()>> cases;
  for (int k = 0; k < 37; ++k)
    cases.push_back([k, &calls] {
      ++calls;
      return CaseResult{std::to_string(k), k % 5 != 0, ""};
    });
  for (unsigned workers : {1u, 3u, 0u}) {
    calls = 0;
    const auto results = run_cases(cases, workers);
    CHECK(calls == 37);
    REQUIRE(results.size() == 37);
    for (int k = 0; k < 37; ++k) {
      CHECK(results[k].label == std::to_string(k));
      CHECK(results[k].passed == (k % 5 != 0));
    }
  }
}

TEST_CASE("a throwing case is a failure") {
  std::vector<std::function<CaseResult()>> cases{[]() -> CaseResult { throw ConsistencyError("boom"); }};
  const auto results = run_cases(cases, 2);
  CHECK_FALSE(results[0].passed);
  CHECK(results[0].detail.find("boom") != std::string::npos);
}

TEST_CASE("oracle comparisons detect mismatches") {
  const CharExpr h = CharExpr::standard();
  Decomposition right;
  right.add(Bipartition::parse("1,1|0"), 1);
  CHECK(check_expression("wedge", h.wedge(2), right, 4).passed);
  Decomposition wrong;
  wrong.add(Bipartition::parse("2|0"), 1);
  CHECK_FALSE(check_expression("wedge", h.wedge(2), wrong, 4).passed);
  CHECK(check_plethysm_against_characters({2}, {1, 1}, 4).passed);
  CHECK(check_graded_power_against_characters(Bipartition::parse("1,1|1"), 1, 2, 5).passed);
}

TEST_CASE("restrict_to_sizes") {
  Decomposition d;
  d.add(Bipartition::parse("1,1|1"), 2);
  d.add(Bipartition::parse("1|0"), 1);
  const Decomposition r = restrict_to_sizes(d, 2, 1);
  CHECK(r.term_count() == 1);
  CHECK(r.multiplicity(Bipartition::parse("1,1|1")) == 2);
}

TEST_CASE("all suites pass") {
  for (const std::string& name : suite_names()) {
    const SuiteResult r = run_suite(name);
    CAPTURE(name);
    for (const auto& f : r.failures()) FAIL_CHECK(f.label << ": " << f.detail);
    CHECK(r.passed());
    CHECK_FALSE(r.cases.empty());
  }
}
