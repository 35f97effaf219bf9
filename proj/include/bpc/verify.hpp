#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "bpc/count.hpp"
#include "bpc/partition.hpp"
#include "bpc/recurrence.hpp"

namespace bpc {

struct VerifyFailure {
  int m = 0;
  std::uint64_t n = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string scope;
  std::uint64_t checked = 0;  // identity instances examined
  std::optional<VerifyFailure> failure;  // first one; the suite stops there

  bool ok() const { return !failure.has_value(); }
};

// Recurrence values against the exhaustive enumeration oracle, every n up
// to n_max for every family in [m_min, m_max].
SuiteReport verify_oracle(int m_min, int m_max, std::uint64_t n_max, MemoTable& memo,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Cross-family partial sums against direct values, families m_min..m_max
// at the support points k * 2^(m+1) for k = 0..max_multiple.
SuiteReport verify_partial_sums(int m_min, int m_max, std::uint64_t max_multiple,
                                MemoTable& memo);

// Closed forms of the first two nonzero values of each family, two
// identities per m = 0..m_max.
SuiteReport verify_closed_forms(int m_max, MemoTable& memo);

// Binomial weights used when regrouping class sizes; injectable so the
// failure-detection path itself can be exercised.
using BinomialFn = std::function<Count(unsigned, unsigned)>;

/* Structural verification of the class decomposition for families
 * 0..m_max over all support points n <= n_max:
 *   - the 1 + 2^(m+1) classes cover the enumeration disjointly,
 *   - each named map is a bijection onto its stated codomain, checked by
 *     exhaustive image comparison (empty classes included),
 *   - class sizes grouped by flag count reproduce every binomially
 *     weighted term of the count recurrence.
 */
SuiteReport verify_bijections(int m_max, std::uint64_t n_max, MemoTable& memo,
                              std::uint64_t cap = kDefaultEnumerationCap,
                              BinomialFn weight = nullptr);

}  // namespace bpc
