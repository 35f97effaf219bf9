#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "bpc/count.hpp"

namespace bpc {

// Exact binomial coefficient, backed by a grow-on-demand Pascal row cache.
Count binomial(unsigned n, unsigned k);

/* Memo store for the count recurrences.  Family m keeps the dense prefix
 * r_m(0), r_m(s), r_m(2s), ... with stride s = 2^(m+1); off-stride values
 * are identically zero and are never stored.  Entries are immutable once
 * written.  A single table may be shared between threads: lookups and fills
 * are serialized internally, so each key is inserted at most once and a
 * reader only ever sees completed entries.
 */
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  bool contains(int m, std::uint64_t n) const;
  std::size_t stored(int m) const;

 private:
  friend Count partition_count(int m, std::uint64_t n, MemoTable& memo);

  mutable std::mutex mu_;
  std::map<int, std::vector<Count>> rows_;
};

/* r_m(n): the number of binary partitions of n subject to the family-m
 * divisibility conditions, computed by the two-branch recurrence.  1 at
 * n = 0, 0 off the 2^(m+1) lattice; on the lattice
 *
 *   r_m(n) = r_m(n - 2^(m+1)) + sum_j C(m+1, 2j+1) r_m((n-(2j+1)2^(m+1))/2)
 *
 * when n/2^(m+1) is odd, with even binomials C(m+1, 2j) and offsets
 * 2j*2^(m+1) when it is even.  Summands whose argument would go negative
 * count zero partitions and are skipped; m = -1 (no conditions) makes the
 * odd-branch sum empty and reduces to the classical
 * r(n) = r(n-1) [+ r(n/2) when n is even].
 */
Count partition_count(int m, std::uint64_t n, MemoTable& memo);

// The nonzero subsequence [r_m(k * 2^(m+1)) for k = 0..count-1].
std::vector<Count> stride_sequence(int m, std::uint64_t count, MemoTable& memo);

// The raw sequence [r_m(n) for n = 0..count-1], zeros included.
std::vector<Count> padded_sequence(int m, std::uint64_t count, MemoTable& memo);

// Closed forms for the first two nonzero values of family m-1 (m >= 0):
// r_{m-1}(2^m) = m+1 and r_{m-1}(2^(m+1)) = 2m+2 + C(m,2).
std::pair<Count, Count> closed_form_counts(int m);

// The cross-family partial sum: for m >= 0 and 2^(m+1) | n,
// sum of r_{m-1}(2^m * k) over k = 0..n/2^(m+1).  Equals r_m(n).
Count partial_sum_count(int m, std::uint64_t n, MemoTable& memo);

}  // namespace bpc
