#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpc/verify.hpp"

using namespace bpc;

TEST_CASE("oracle suite passes on small ranges") {
  MemoTable memo;
  const auto report = verify_oracle(-1, 2, 48, memo);
  CHECK(report.ok());
  CHECK(report.checked == 4 * 49);
}

TEST_CASE("partial sum suite") {
  MemoTable memo;
  const auto report = verify_partial_sums(0, 3, 32, memo);
  CHECK(report.ok());
  CHECK(report.checked == 4 * 33);
  CHECK_THROWS_AS(verify_partial_sums(-1, 3, 8, memo), std::invalid_argument);
}

TEST_CASE("closed form suite counts two identities per family") {
  MemoTable memo;
  const auto report = verify_closed_forms(20, memo);
  CHECK(report.ok());
  CHECK(report.checked == 42);
}

TEST_CASE("bijection suite passes on small ranges") {
  MemoTable memo;
  const auto report = verify_bijections(2, 48, memo);
  CHECK(report.ok());
  CHECK(report.checked > 0);
}

TEST_CASE("a wrong binomial weight is caught with a counterexample") {
  MemoTable memo;
  const auto skewed = [](unsigned n, unsigned k) {
    const Count real = binomial(n, k);
    return (n == 2 && k == 1) ? real + 1 : real;
  };
  const auto report = verify_bijections(2, 48, memo, kDefaultEnumerationCap, skewed);
  REQUIRE_FALSE(report.ok());
  // the first family whose branch uses that weight, at its first total
  CHECK(report.failure->m == 1);
  CHECK(report.failure->n == 4);
  CHECK_FALSE(report.failure->detail.empty());
}
