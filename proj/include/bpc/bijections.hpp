#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bpc/partition.hpp"

namespace bpc {

/* Residue pattern of a partition with no unit parts, for a family m >= 0:
 * bit eps_i records whether alpha_i is congruent to 2^(m+2-i) or to 0
 * modulo 2^(m+3-i), for indices i = 2..m+2.
 */
struct EpsilonProfile {
  int m = 0;
  std::vector<std::uint8_t> bits;  // eps_2 .. eps_{m+2}, length m+1

  int at(std::size_t i) const { return bits.at(i - 2); }  // i in 2..m+2
  // number of set bits among eps_2..eps_{m+1} (the last bit is excluded;
  // it is forced by the parity of n / 2^(m+1))
  unsigned low_flag_count() const {
    unsigned k = 0;
    for (std::size_t idx = 0; idx + 1 < bits.size(); ++idx) k += bits[idx];
    return k;
  }

  friend bool operator==(const EpsilonProfile&, const EpsilonProfile&) = default;
};

/* Which of the 1 + 2^(m+1) disjoint collections a partition belongs to:
 * either it has unit parts (alpha_1 > 0), or it is classified by its
 * epsilon pattern.
 */
struct PartitionClass {
  enum class Kind { with_unit_parts, no_unit_parts };
  Kind kind = Kind::with_unit_parts;
  int m = 0;
  std::uint64_t n = 0;
  std::optional<EpsilonProfile> eps;  // engaged iff kind == no_unit_parts
};

// Classify p within family m (m >= 0; p must satisfy the family conditions).
// For partitions with alpha_1 = 0 the forced value of the last epsilon bit
// is asserted against the parity analysis; a mismatch is a defect.
PartitionClass classify(const BinaryPartition& p, int m);

// sigma: all-zero-epsilon partitions of n -> partitions of n/2.  Drops the
// leading zero coefficient, halving every part.  Inverse of double_parts.
BinaryPartition halve_parts(const BinaryPartition& p, int m);
BinaryPartition double_parts(const BinaryPartition& p, int m);

// tau_1: partitions of n with alpha_1 > 0 -> partitions of n - 2^(m+1).
// Removes a block of 2^(m+1) unit parts.  Inverse of add_unit_block.
BinaryPartition remove_unit_block(const BinaryPartition& p, int m);
BinaryPartition add_unit_block(const BinaryPartition& p, int m);

// tau_i for 2 <= i <= m+2: partitions with eps_i = 1 -> partitions of
// n - 2^(m+1) with eps_i = 0; subtracts 2^(m+2-i) from alpha_i.  Inverse of
// add_block_at.
BinaryPartition remove_block_at(std::size_t i, const BinaryPartition& p, int m);
BinaryPartition add_block_at(std::size_t i, const BinaryPartition& p, int m);

/* The composite reduction of an epsilon class: removes one block per set
 * bit among eps_2..eps_{m+1} (descending index), removes the forced
 * eps_{m+2} block when the parity analysis demands one, then halves.
 * Lands in the family-m partitions of (n - (k+1) 2^(m+1))/2 or of
 * (n - k 2^(m+1))/2 with k = low_flag_count(), depending on that parity.
 */
BinaryPartition collapse_class(const BinaryPartition& p, int m);

// Target of collapse_class for a class with k low flags inside family m at
// total n, and whether the forced last bit is set ("case one").
bool collapse_adds_forced_block(int m, std::uint64_t n, unsigned k);
std::uint64_t collapse_target(int m, std::uint64_t n, unsigned k);

}  // namespace bpc
