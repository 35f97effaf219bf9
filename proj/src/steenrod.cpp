#include "bpc/steenrod.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace bpc {

unsigned binary_digit_sum(std::uint64_t j) { return unsigned(std::popcount(j)); }

unsigned milgram_shift(std::uint64_t j) {
  const unsigned a = binary_digit_sum(j);
  return 2 * (a / 4) + (a % 4 != 0 ? 1 : 0);
}

std::uint64_t milgram_dim(unsigned i, std::uint64_t n) {
  static constexpr std::uint64_t offsets[4] = {1, 3, 5, 3};
  if (i > 3) throw std::invalid_argument("Milgram index must be 0..3");
  return 4 * n + offsets[i];
}

std::uint64_t milgram_summand_dim(std::uint64_t j) {
  const unsigned a = binary_digit_sum(j);
  const std::uint64_t offset = (a % 4 <= 1) ? 1 : 5;
  return 4 * j - 2 * std::uint64_t(a) + offset;
}

Count free_rank_b1(std::uint64_t j, MemoTable& memo) {
  const Count total = partition_count(1, 4 * j, memo);
  const Count reserved = milgram_summand_dim(j);
  if (total < reserved)
    throw std::logic_error("free rank of index " + std::to_string(j) +
                           " would be negative");
  const Count diff = total - reserved;
  if (diff % 8 != 0)
    throw std::logic_error("free rank of index " + std::to_string(j) +
                           " is not integral: 8 does not divide " + diff.str());
  return diff / 8;
}

Count free_rank_b2(std::uint64_t j, MemoTable& memo) {
  Count total = 0;
  for (std::uint64_t i = 0; i <= j; ++i) total += free_rank_b1(i, memo);
  return total;
}

Count free_rank_b2_constant_term(std::uint64_t j, MemoTable& memo) {
  return Count(j + 1) * free_rank_b1(j, memo);
}

Count brown_gitler_dim(unsigned family, std::uint64_t j, MemoTable& memo) {
  if (family != 1 && family != 2)
    throw std::invalid_argument("Brown-Gitler dimension is computed for families 1 and 2");
  const std::uint64_t weight_step = std::uint64_t{1} << family;
  Count direct = 0;
  for (std::uint64_t k = 0; k <= j; ++k)
    direct += partition_count(int(family) - 1, weight_step * k, memo);
  const Count collapsed = partition_count(int(family), 2 * weight_step * j, memo);
  if (direct != collapsed)
    throw std::logic_error("weight-sum and collapsed dimensions disagree at j = " +
                           std::to_string(j));
  return direct;
}

std::vector<RankRecord> rank_table(std::uint64_t j_max, MemoTable& memo) {
  std::vector<RankRecord> out;
  out.reserve(std::size_t(j_max) + 1);
  Count running = 0;
  partition_count(1, 4 * j_max, memo);  // fill the family row once
  for (std::uint64_t j = 0; j <= j_max; ++j) {
    RankRecord rec;
    rec.j = j;
    rec.alpha = binary_digit_sum(j);
    rec.shift = milgram_shift(j);
    rec.summand_dim = milgram_summand_dim(j);
    rec.f1 = free_rank_b1(j, memo);
    running += rec.f1;
    rec.f2 = running;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace bpc
