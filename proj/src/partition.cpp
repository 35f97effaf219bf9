#include "bpc/partition.hpp"

#include <algorithm>
#include <sstream>

namespace bpc {

namespace {

void check_family(int m) {
  if (m < -1 || m > kMaxFamilyIndex)
    throw std::invalid_argument("family index m must lie in [-1, " +
                                std::to_string(kMaxFamilyIndex) + "], got " +
                                std::to_string(m));
}

// Smallest power of two dividing every contribution slots >= i can still
// make: 2^(m+1) while conditioned slots (and the first free one) remain,
// 2^(i-1) afterwards.
unsigned granularity_bits(unsigned i, int m) {
  return (int(i) <= m + 2) ? unsigned(m + 1) : i - 1;
}

// Contribution of the smallest admissible nonzero coefficient at slot i.
std::uint64_t slot_step(unsigned i, int m) {
  return std::uint64_t{1} << std::max<unsigned>(unsigned(m + 1), i - 1);
}

void count_rec(std::uint64_t rem, unsigned i, int m, std::uint64_t cap,
               std::uint64_t& count) {
  if (rem == 0) {
    if (++count > cap) throw EnumerationCapError(cap);
    return;
  }
  const unsigned gb = granularity_bits(i, m);
  if (gb >= 64 || (rem & ((std::uint64_t{1} << gb) - 1))) return;
  const std::uint64_t step = slot_step(i, m);
  for (std::uint64_t used = 0; used <= rem; used += step)
    count_rec(rem - used, i + 1, m, cap, count);
}

void enum_rec(std::uint64_t rem, unsigned i, int m, std::uint64_t cap,
              std::vector<std::uint64_t>& prefix, std::uint64_t& count,
              const std::function<void(std::span<const std::uint64_t>)>& visit) {
  if (rem == 0) {
    if (++count > cap) throw EnumerationCapError(cap);
    visit(std::span<const std::uint64_t>(prefix));
    return;
  }
  const unsigned gb = granularity_bits(i, m);
  if (gb >= 64 || (rem & ((std::uint64_t{1} << gb) - 1))) return;
  const std::uint64_t step = slot_step(i, m);
  const unsigned weight_bits = i - 1;
  for (std::uint64_t used = 0; used <= rem; used += step) {
    prefix.push_back(used >> weight_bits);
    enum_rec(rem - used, i + 1, m, cap, prefix, count, visit);
    prefix.pop_back();
  }
}

// Exponent-tuple walk over the graded-ring generators, heaviest slot first.
// Slots 1..m+2 all weigh 2^(m+1); slot t > m+2 weighs 2^(t-1).
void monomial_rec(std::uint64_t rem, unsigned slot, int m, std::uint64_t cap,
                  std::uint64_t& count) {
  if (rem == 0) {
    if (++count > cap) throw EnumerationCapError(cap);
    return;
  }
  if (slot == 0) return;
  const std::uint64_t w = slot_step(slot, m);
  for (std::uint64_t used = 0; used <= rem; used += w)
    monomial_rec(rem - used, slot - 1, m, cap, count);
}

}  // namespace

BinaryPartition::BinaryPartition(std::vector<std::uint64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i >= 64) throw std::invalid_argument("coefficient index out of range");
    const std::uint64_t term = coeffs_[i] << i;
    if (coeffs_[i] != 0 && (term >> i) != coeffs_[i])
      throw std::invalid_argument("partition target overflows 64 bits");
    const std::uint64_t next = total + term;
    if (next < total)
      throw std::invalid_argument("partition target overflows 64 bits");
    total = next;
  }
  target_ = total;
}

std::string to_string(const BinaryPartition& p) {
  std::ostringstream os;
  os << "(n=" << p.target() << ";";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    os << (i ? "," : " ") << p.coeffs()[i];
  os << ")";
  return os.str();
}

DivisibilityProfile::DivisibilityProfile(int m) : m_(m) { check_family(m); }

bool satisfies(const BinaryPartition& p, const DivisibilityProfile& d) {
  for (int i = 1; i <= d.m() + 1; ++i)
    if (p.coeff(std::size_t(i)) % d.coeff_divisor(std::size_t(i)) != 0)
      return false;
  return true;
}

EnumerationCapError::EnumerationCapError(std::uint64_t cap)
    : std::runtime_error("enumeration exceeds the configured cap of " +
                         std::to_string(cap) + " partitions"),
      cap_(cap) {}

std::vector<BinaryPartition> enumerate_partitions(std::uint64_t n,
                                                  const DivisibilityProfile& d,
                                                  std::uint64_t cap) {
  std::vector<BinaryPartition> out;
  for_each_partition(
      n, d,
      [&out](std::span<const std::uint64_t> coeffs) {
        out.emplace_back(std::vector<std::uint64_t>(coeffs.begin(), coeffs.end()));
      },
      cap);
  return out;
}

void for_each_partition(std::uint64_t n, const DivisibilityProfile& d,
                        const std::function<void(std::span<const std::uint64_t>)>& visit,
                        std::uint64_t cap) {
  std::vector<std::uint64_t> prefix;
  prefix.reserve(70);
  std::uint64_t count = 0;
  enum_rec(n, 1, d.m(), cap, prefix, count, visit);
}

Count count_by_enumeration(std::uint64_t n, const DivisibilityProfile& d,
                           std::uint64_t cap) {
  std::uint64_t count = 0;
  count_rec(n, 1, d.m(), cap, count);
  return Count(count);
}

Count count_monomials_by_weight(std::uint64_t n, int m, std::uint64_t cap) {
  check_family(m);
  // heaviest generator whose weight does not exceed n
  unsigned top = unsigned(m + 2);
  while (n > 0 && slot_step(top + 1, m) <= n) ++top;
  std::uint64_t count = 0;
  monomial_rec(n, top, m, cap, count);
  return Count(count);
}

}  // namespace bpc
