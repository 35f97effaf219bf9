#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpc/count.hpp"

namespace bpc {

/* A binary partition of n, stored as its coefficient vector
 * (alpha_1, alpha_2, ..., alpha_k) with n = sum_i alpha_i * 2^(i-1) and
 * trailing zeros trimmed.  The empty vector is the unique partition of 0.
 */
class BinaryPartition {
 public:
  BinaryPartition() = default;
  explicit BinaryPartition(std::vector<std::uint64_t> coeffs);

  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  // 1-based alpha_i; indices past the stored length read as 0
  std::uint64_t coeff(std::size_t i) const {
    return (i >= 1 && i <= coeffs_.size()) ? coeffs_[i - 1] : 0;
  }
  std::uint64_t target() const { return target_; }
  bool empty() const { return coeffs_.empty(); }

  friend bool operator==(const BinaryPartition&, const BinaryPartition&) = default;
  // lexicographic on the coefficient vector; this is the enumeration order
  friend bool operator<(const BinaryPartition& a, const BinaryPartition& b) {
    return a.coeffs_ < b.coeffs_;
  }

 private:
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t target_ = 0;
};

std::string to_string(const BinaryPartition& p);

/* The family of divisibility conditions indexed by m >= -1:
 * 2^(m+2-i) must divide alpha_i for 1 <= i <= m+1.  m = -1 imposes no
 * conditions and admits every binary partition.
 */
class DivisibilityProfile {
 public:
  explicit DivisibilityProfile(int m);
  int m() const { return m_; }

  // required divisor of alpha_i (1-based); 1 once i > m+1
  std::uint64_t coeff_divisor(std::size_t i) const {
    return (i <= std::size_t(m_ + 1)) ? std::uint64_t{1} << (m_ + 2 - int(i)) : 1;
  }

 private:
  int m_ = -1;
};

// widest family index the 64-bit part arithmetic supports
inline constexpr int kMaxFamilyIndex = 60;

bool satisfies(const BinaryPartition& p, const DivisibilityProfile& d);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Raised when an enumeration would visit more partitions than the caller's
// cap.  Signals oracle scale exceeded, not a mathematical failure.
class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(std::uint64_t cap);
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

/* Exhaustive enumeration of all binary partitions of n satisfying the
 * profile, in lexicographic coefficient order.  This is the ground-truth
 * oracle the recurrences are checked against.
 */
std::vector<BinaryPartition> enumerate_partitions(
    std::uint64_t n, const DivisibilityProfile& d,
    std::uint64_t cap = kDefaultEnumerationCap);

// Streaming form of enumerate_partitions; the span aliases an internal
// buffer that is invalid once the visitor returns.
void for_each_partition(std::uint64_t n, const DivisibilityProfile& d,
                        const std::function<void(std::span<const std::uint64_t>)>& visit,
                        std::uint64_t cap = kDefaultEnumerationCap);

// |enumerate_partitions(n, d)| computed by walking every partition, never by
// a recurrence shortcut.
Count count_by_enumeration(std::uint64_t n, const DivisibilityProfile& d,
                           std::uint64_t cap = kDefaultEnumerationCap);

/* Independent re-count through the graded-ring reading: the number of
 * monomials of weight n in a polynomial ring on generators
 * Y_1, ..., Y_{m+2} of weight 2^(m+1) and one generator of weight 2^t for
 * every t > m+1.  Must agree with count_by_enumeration for every (n, m).
 */
Count count_monomials_by_weight(std::uint64_t n, int m,
                                std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace bpc
