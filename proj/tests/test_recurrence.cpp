#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <thread>

#include "bpc/partition.hpp"
#include "bpc/recurrence.hpp"

using namespace bpc;

namespace {

// The unrestricted count stated directly: r(n) = r(n-1) for odd n,
// r(n) = r(n-1) + r(n/2) for even n, r(0) = 1.  Independent of the
// two-branch formula the library implements.
Count classical_binary_count(std::uint64_t n) {
  static std::map<std::uint64_t, Count> cache{{0, Count(1)}};
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (std::uint64_t k = cache.rbegin()->first + 1; k <= n; ++k) {
    Count v = cache[k - 1];
    if (k % 2 == 0) v += cache[k / 2];
    cache[k] = std::move(v);
  }
  return cache[n];
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  // a multiplicative route as a second opinion
  for (unsigned n = 1; n <= 40; ++n) {
    Count v = 1;
    for (unsigned k = 1; k <= n; ++k) {
      v = v * (n - k + 1) / k;
      CHECK(binomial(n, k) == v);
    }
  }
}

TEST_CASE("single count values") {
  MemoTable memo;
  CHECK(partition_count(-1, 14, memo) == 26);
  CHECK(partition_count(1, 60, memo) == 813);
  // family 3 nonzero values run 1,5,16,40,87,171,312,536,879,1387 so the
  // totals 128 and 144 land on 879 and 1387
  CHECK(partition_count(3, 128, memo) == 879);
  CHECK(partition_count(3, 144, memo) == 1387);
  CHECK(partition_count(2, 4, memo) == 0);  // 8 does not divide 4
  CHECK(partition_count(5, 0, memo) == 1);
  CHECK_THROWS_AS(partition_count(-2, 0, memo), std::invalid_argument);
}

TEST_CASE("stride and padded sequences") {
  MemoTable memo;
  CHECK(stride_sequence(0, 5, memo) ==
        std::vector<Count>{1, 2, 4, 6, 10});
  CHECK(stride_sequence(2, 4, memo) == std::vector<Count>{1, 4, 11, 24});
  CHECK(stride_sequence(5, 1, memo) == std::vector<Count>{1});
  CHECK(padded_sequence(-1, 16, memo) ==
        std::vector<Count>{1, 1, 2, 2, 4, 4, 6, 6, 10, 10, 14, 14, 20, 20, 26, 26});
  CHECK(padded_sequence(0, 8, memo) == std::vector<Count>{1, 0, 2, 0, 4, 0, 6, 0});
  CHECK_THROWS_AS(stride_sequence(0, 0, memo), std::invalid_argument);
}

TEST_CASE("the unrestricted family reduces to the classical recursion") {
  MemoTable memo;
  for (std::uint64_t n = 0; n <= 300; ++n)
    CHECK(partition_count(-1, n, memo) == classical_binary_count(n));
}

TEST_CASE("families 1..3 match their expanded two-branch formulas") {
  MemoTable memo;
  // the specializations written out term by term, evaluated without memo
  const auto r = [&memo](int m, std::int64_t n) {
    return n < 0 ? Count(0) : partition_count(m, std::uint64_t(n), memo);
  };
  for (std::int64_t n = 1; n <= 400; ++n) {
    if (n % 8 == 4)
      CHECK(r(1, n) == r(1, n - 4) + 2 * r(1, (n - 4) / 2));
    else if (n % 8 == 0)
      CHECK(r(1, n) == r(1, n - 4) + r(1, n / 2) + r(1, (n - 8) / 2));
    else
      CHECK(r(1, n) == 0);

    if (n % 16 == 8)
      CHECK(r(2, n) == r(2, n - 8) + 3 * r(2, (n - 8) / 2) + r(2, (n - 24) / 2));
    else if (n % 16 == 0)
      CHECK(r(2, n) == r(2, n - 8) + r(2, n / 2) + 3 * r(2, (n - 16) / 2));
    else
      CHECK(r(2, n) == 0);

    if (n % 32 == 16)
      CHECK(r(3, n) == r(3, n - 16) + 4 * r(3, (n - 16) / 2) + 4 * r(3, (n - 48) / 2));
    else if (n % 32 == 0)
      CHECK(r(3, n) ==
            r(3, n - 16) + r(3, n / 2) + 6 * r(3, (n - 32) / 2) + r(3, (n - 64) / 2));
    else
      CHECK(r(3, n) == 0);
  }
}

TEST_CASE("closed forms for the first two nonzero values") {
  CHECK(closed_form_counts(0) == std::pair<Count, Count>{1, 2});
  CHECK(closed_form_counts(2) == std::pair<Count, Count>{3, 7});
  CHECK(closed_form_counts(4) == std::pair<Count, Count>{5, 16});
  // the m = 4 pair against the brute-force oracle
  CHECK(count_by_enumeration(16, DivisibilityProfile(3)) == 5);
  CHECK(count_by_enumeration(32, DivisibilityProfile(3)) == 16);
  MemoTable memo;
  for (int m = 0; m <= 20; ++m) {
    const auto [first, second] = closed_form_counts(m);
    CHECK(partition_count(m - 1, std::uint64_t{1} << m, memo) == first);
    CHECK(partition_count(m - 1, std::uint64_t{1} << (m + 1), memo) == second);
  }
  CHECK_THROWS_AS(closed_form_counts(-1), std::invalid_argument);
}

TEST_CASE("cross-family partial sums") {
  MemoTable memo;
  CHECK(partial_sum_count(0, 8, memo) == 10);   // 1+1+2+2+4
  CHECK(partial_sum_count(1, 12, memo) == 13);  // 1+2+4+6
  CHECK(partial_sum_count(3, 16, memo) == 5);   // 1+4
  CHECK(partial_sum_count(3, 16, memo) == partition_count(3, 16, memo));
  CHECK_THROWS_AS(partial_sum_count(1, 6, memo), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum_count(-1, 4, memo), std::invalid_argument);
  for (int m = 0; m <= 4; ++m)
    for (std::uint64_t k = 0; k <= 64; ++k) {
      const std::uint64_t n = k << (m + 1);
      CHECK(partial_sum_count(m, n, memo) == partition_count(m, n, memo));
    }
}

TEST_CASE("support and monotonicity") {
  MemoTable memo;
  for (int m = -1; m <= 4; ++m) {
    const std::uint64_t stride = std::uint64_t{1} << (m + 1);
    for (std::uint64_t n = 0; n <= 200; ++n) {
      const bool on_support = n % stride == 0;
      CHECK((partition_count(m, n, memo) > 0) == on_support);
    }
    for (std::uint64_t n = 0; n + stride <= 200; n += stride)
      CHECK(partition_count(m, n + stride, memo) >= partition_count(m, n, memo));
  }
}

TEST_CASE("memo stores only support keys and is deterministic") {
  MemoTable memo;
  partition_count(2, 64, memo);
  CHECK(memo.contains(2, 64));
  CHECK(memo.contains(2, 0));
  CHECK_FALSE(memo.contains(2, 4));   // off the lattice, never stored
  CHECK_FALSE(memo.contains(1, 64));  // other families untouched
  CHECK(memo.stored(2) == 9);         // the dense prefix 0, 8, ..., 64

  MemoTable fresh;
  CHECK(partition_count(2, 64, fresh) == partition_count(2, 64, memo));
}

TEST_CASE("a shared memo table is safe under concurrent callers") {
  MemoTable shared;
  std::vector<std::thread> workers;
  std::vector<Count> results(8);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&shared, &results, t] {
      Count local = 0;
      for (int m = -1; m <= 3; ++m)
        for (std::uint64_t n = 0; n <= 256; ++n)
          local += partition_count(m, n, shared);
      results[std::size_t(t)] = std::move(local);
    });
  for (auto& w : workers) w.join();

  MemoTable serial;
  Count expected = 0;
  for (int m = -1; m <= 3; ++m)
    for (std::uint64_t n = 0; n <= 256; ++n) expected += partition_count(m, n, serial);
  for (const auto& r : results) CHECK(r == expected);
}
