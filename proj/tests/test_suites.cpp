#include <doctest.h>

#include <algorithm>

#include "wittkit/suites.hpp"

using namespace wittkit;

namespace {

bool same_results(const SuiteReport& a, const SuiteReport& b) {
  if (a.properties.size() != b.properties.size() || a.skipped != b.skipped) return false;
  for (std::size_t i = 0; i < a.properties.size(); ++i) {
    const auto &x = a.properties[i], &y = b.properties[i];
    if (x.name != y.name || x.passed != y.passed || x.failed != y.failed || x.counterexample != y.counterexample)
      return false;
  }
  return true;
}

SuiteOptions opts(RingSpec ring, std::size_t n, std::size_t trials, std::uint64_t seed,
                  Execution e = Execution::Parallel) {
  SuiteOptions o;
  o.ring = ring;
  o.precision = n;
  o.trials = trials;
  o.seed = seed;
  o.execution = e;
  return o;
}

}  // namespace

TEST_CASE("every suite passes on a small run") {
  for (const RingSpec& ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::integers_mod(6),
                               RingSpec::prime_field(2), RingSpec::prime_field(3)}) {
    CAPTURE(ring.to_string());
    const auto report = run_suite("all", opts(ring, 6, 20, 11));
    for (const auto& p : report.properties) {
      CAPTURE(p.name);
      CAPTURE(p.counterexample.value_or(""));
      CHECK(p.failed == 0);
      CHECK(p.passed > 0);
    }
    CHECK(report.ok());
  }
}

TEST_CASE("serial and parallel runs report the same results") {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    CAPTURE(name);
    const auto ring = RingSpec::prime_field(3);
    const auto a = run_suite(name, opts(ring, 6, 25, 5, Execution::Serial));
    const auto b = run_suite(name, opts(ring, 6, 25, 5, Execution::Parallel));
    CHECK(same_results(a, b));
  }
}

TEST_CASE("seeds are reproducible and matter") {
  const auto ring = RingSpec::integers_mod(6);
  const auto a = run_suite("witt-axioms", opts(ring, 5, 30, 9));
  const auto b = run_suite("witt-axioms", opts(ring, 5, 30, 9));
  CHECK(same_results(a, b));
}

TEST_CASE("suite selection errors") {
  const auto names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "witt-axioms") != names.end());
  CHECK(std::find(names.begin(), names.end(), "all") != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite", opts(RingSpec::integers(), 4, 1, 0)), Error);
  CHECK_THROWS_AS(run_suite("verfrob-fp", opts(RingSpec::integers(), 4, 1, 0)), Error);
  CHECK_THROWS_AS(run_suite("torsion-mechanism", opts(RingSpec::integers_mod(4), 4, 1, 0)), Error);
  CHECK_THROWS_AS(run_suite("invert-int", opts(RingSpec::integers(), 4, 1, 0)), Error);
  CHECK_THROWS_AS(run_suite("witt-axioms", opts(RingSpec::integers(), 0, 1, 0)), Error);
  const auto all = run_suite("all", opts(RingSpec::integers(), 4, 2, 0));
  CHECK(all.skipped.size() == 3);
}
