#include "bpc/recurrence.hpp"

#include <stdexcept>
#include <string>

#include "bpc/partition.hpp"

namespace bpc {

namespace {

void check_family(int m) {
  if (m < -1 || m > kMaxFamilyIndex)
    throw std::invalid_argument("family index m must lie in [-1, " +
                                std::to_string(kMaxFamilyIndex) + "], got " +
                                std::to_string(m));
}

std::mutex pascal_mu;
std::vector<std::vector<Count>> pascal_rows = {{Count(1)}};

}  // namespace

Count binomial(unsigned n, unsigned k) {
  if (k > n) return Count(0);
  std::scoped_lock lock(pascal_mu);
  while (pascal_rows.size() <= n) {
    const auto& prev = pascal_rows.back();
    std::vector<Count> row(prev.size() + 1, Count(1));
    for (std::size_t i = 1; i + 1 < row.size(); ++i)
      row[i] = prev[i - 1] + prev[i];
    pascal_rows.push_back(std::move(row));
  }
  return pascal_rows[n][k];
}

bool MemoTable::contains(int m, std::uint64_t n) const {
  check_family(m);
  const std::uint64_t stride = std::uint64_t{1} << (m + 1);
  if (n & (stride - 1)) return false;
  std::scoped_lock lock(mu_);
  auto it = rows_.find(m);
  return it != rows_.end() && (n >> (m + 1)) < it->second.size();
}

std::size_t MemoTable::stored(int m) const {
  std::scoped_lock lock(mu_);
  auto it = rows_.find(m);
  return it == rows_.end() ? 0 : it->second.size();
}

Count partition_count(int m, std::uint64_t n, MemoTable& memo) {
  check_family(m);
  const unsigned sbits = unsigned(m + 1);
  const std::uint64_t stride = std::uint64_t{1} << sbits;
  if (n & (stride - 1)) return Count(0);
  const std::uint64_t want = n >> sbits;

  // fetch the whole Pascal row up front so the fill loop stays lock-free
  std::vector<Count> weights(std::size_t(m + 2));
  for (unsigned k = 0; k < weights.size(); ++k) weights[k] = binomial(unsigned(m + 1), k);

  std::scoped_lock lock(memo.mu_);
  auto& row = memo.rows_[m];
  if (row.empty()) row.emplace_back(1);  // r_m(0) = 1
  for (std::uint64_t t = row.size(); t <= want; ++t) {
    Count v = row[t - 1];
    if (t & 1) {
      // t*stride is an odd multiple of 2^(m+1)
      for (int j = 0; 2 * j <= m; ++j) {
        const std::uint64_t c = std::uint64_t(2 * j + 1);
        if (c > t) break;  // summand would need a negative argument: empty
        v += weights[std::size_t(2 * j + 1)] * row[std::size_t((t - c) / 2)];
      }
    } else {
      for (int j = 0; 2 * j <= m + 1; ++j) {
        const std::uint64_t c = std::uint64_t(2 * j);
        if (c > t) break;
        v += weights[std::size_t(2 * j)] * row[std::size_t((t - c) / 2)];
      }
    }
    row.push_back(std::move(v));
  }
  return row[std::size_t(want)];
}

std::vector<Count> stride_sequence(int m, std::uint64_t count, MemoTable& memo) {
  check_family(m);
  if (count == 0) throw std::invalid_argument("sequence length must be positive");
  const unsigned sbits = unsigned(m + 1);
  if (count > 1 && (count - 1) > (std::uint64_t(-1) >> sbits))
    throw std::invalid_argument("sequence length overflows the argument range");
  std::vector<Count> out;
  out.reserve(std::size_t(count));
  // one call fills the whole prefix; the rest are lookups
  partition_count(m, (count - 1) << sbits, memo);
  for (std::uint64_t k = 0; k < count; ++k)
    out.push_back(partition_count(m, k << sbits, memo));
  return out;
}

std::vector<Count> padded_sequence(int m, std::uint64_t count, MemoTable& memo) {
  check_family(m);
  if (count == 0) throw std::invalid_argument("sequence length must be positive");
  std::vector<Count> out;
  out.reserve(std::size_t(count));
  for (std::uint64_t n = 0; n < count; ++n)
    out.push_back(partition_count(m, n, memo));
  return out;
}

std::pair<Count, Count> closed_form_counts(int m) {
  if (m < 0) throw std::invalid_argument("closed forms require m >= 0");
  const Count first = m + 1;
  const Count second = Count(2 * std::int64_t(m) + 2) + binomial(unsigned(m), 2);
  return {first, second};
}

Count partial_sum_count(int m, std::uint64_t n, MemoTable& memo) {
  if (m < 0) throw std::invalid_argument("partial sums require m >= 0");
  check_family(m);
  const std::uint64_t stride = std::uint64_t{1} << (m + 1);
  if (n & (stride - 1))
    throw std::invalid_argument("partial sum argument " + std::to_string(n) +
                                " is not a multiple of 2^" + std::to_string(m + 1));
  const std::uint64_t upper = n >> (m + 1);
  const std::uint64_t half_stride = std::uint64_t{1} << m;
  Count total = 0;
  partition_count(m - 1, upper << m, memo);  // fill once
  for (std::uint64_t k = 0; k <= upper; ++k)
    total += partition_count(m - 1, k * half_stride, memo);
  return total;
}

}  // namespace bpc
