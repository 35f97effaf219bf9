#pragma once

#include <cstdint>
#include <vector>

#include "bpc/count.hpp"
#include "bpc/recurrence.hpp"

namespace bpc {

// Number of 1s in the binary expansion of j.
unsigned binary_digit_sum(std::uint64_t j);

// Degree shift of the Milgram summand attached to j: with a = digit sum,
// 2*floor(a/4), plus one unless a is a multiple of 4.
unsigned milgram_shift(std::uint64_t j);

// F2-dimension of the Milgram module Q_{i,n}: 4n + {1, 3, 5, 3} for
// i = 0, 1, 2, 3.
std::uint64_t milgram_dim(unsigned i, std::uint64_t n);

// Dimension of the non-free summand of the j-th integral Brown-Gitler
// homology: 4j - 2a + 1 when the digit sum a is 0 or 1 mod 4, and
// 4j - 2a + 5 when it is 2 or 3 mod 4.  Always equals
// milgram_dim(a mod 4, j - milgram_shift(j)).
std::uint64_t milgram_summand_dim(std::uint64_t j);

// Free rank of the j-th integral Brown-Gitler homology as a module over
// the 8-dimensional subalgebra: (r_1(4j) - milgram_summand_dim(j)) / 8.
// The difference is guaranteed nonnegative and divisible by 8; anything
// else is a defect and throws.
Count free_rank_b1(std::uint64_t j, MemoTable& memo);

// Free rank at the next level: the partial sum of free_rank_b1 over 0..j.
Count free_rank_b2(std::uint64_t j, MemoTable& memo);

// Variant reading with a constant summand, (j+1) * free_rank_b1(j); kept
// inspectable next to the partial-sum reading.
Count free_rank_b2_constant_term(std::uint64_t j, MemoTable& memo);

// F2-dimension of the j-th Brown-Gitler homology for family i in {1, 2},
// computed both as the direct sum over weights and as the collapsed
// single count r_i(2^(i+1) j); the two must agree.
Count brown_gitler_dim(unsigned family, std::uint64_t j, MemoTable& memo);

struct RankRecord {
  std::uint64_t j = 0;
  unsigned alpha = 0;            // binary digit sum of j
  unsigned shift = 0;            // milgram_shift(j)
  std::uint64_t summand_dim = 0; // milgram_summand_dim(j)
  Count f1;                      // free_rank_b1(j)
  Count f2;                      // free_rank_b2(j)
};

// Records for j = 0..j_max with the partial sums accumulated in one pass.
std::vector<RankRecord> rank_table(std::uint64_t j_max, MemoTable& memo);

}  // namespace bpc
