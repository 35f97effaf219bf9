#include "bpc/bijections.hpp"

#include <stdexcept>
#include <string>

namespace bpc {

namespace {

void check_map_family(int m) {
  if (m < 0 || m > kMaxFamilyIndex)
    throw std::invalid_argument(
        "class maps are defined for families m >= 0, got m = " + std::to_string(m));
}

void require_member(const BinaryPartition& p, int m) {
  if (!satisfies(p, DivisibilityProfile(m)))
    throw std::invalid_argument(to_string(p) + " does not satisfy the family-" +
                                std::to_string(m) + " conditions");
}

std::uint64_t block_size(std::size_t i, int m) {
  return std::uint64_t{1} << (std::size_t(m) + 2 - i);  // 2^(m+2-i)
}

}  // namespace

PartitionClass classify(const BinaryPartition& p, int m) {
  check_map_family(m);
  require_member(p, m);
  PartitionClass c;
  c.m = m;
  c.n = p.target();
  if (p.coeff(1) > 0) {
    c.kind = PartitionClass::Kind::with_unit_parts;
    return c;
  }
  c.kind = PartitionClass::Kind::no_unit_parts;
  EpsilonProfile eps;
  eps.m = m;
  eps.bits.resize(std::size_t(m) + 1);
  for (std::size_t i = 2; i <= std::size_t(m) + 2; ++i)
    eps.bits[i - 2] = std::uint8_t((p.coeff(i) / block_size(i, m)) & 1);

  // Parity of n / 2^(m+1) together with the number of low flags forces the
  // last bit; any other combination cannot come from an actual partition.
  const unsigned k = eps.low_flag_count();
  const bool forced = collapse_adds_forced_block(m, c.n, k);
  if (eps.bits.back() != (forced ? 1 : 0))
    throw std::logic_error("epsilon classification of " + to_string(p) +
                           " contradicts the forced parity of the last bit");
  c.eps = std::move(eps);
  return c;
}

BinaryPartition halve_parts(const BinaryPartition& p, int m) {
  const PartitionClass c = classify(p, m);
  if (c.kind != PartitionClass::Kind::no_unit_parts)
    throw std::invalid_argument("halve_parts requires alpha_1 = 0, got " + to_string(p));
  for (std::size_t i = 2; i <= std::size_t(m) + 2; ++i)
    if (c.eps->at(i) != 0)
      throw std::invalid_argument("halve_parts requires an all-zero epsilon pattern, got " +
                                  to_string(p));
  std::vector<std::uint64_t> shifted;
  if (!p.coeffs().empty())
    shifted.assign(p.coeffs().begin() + 1, p.coeffs().end());
  BinaryPartition out{std::move(shifted)};
  if (out.target() * 2 != p.target())
    throw std::logic_error("halve_parts produced a wrong target");
  return out;
}

BinaryPartition double_parts(const BinaryPartition& p, int m) {
  check_map_family(m);
  require_member(p, m);
  std::vector<std::uint64_t> shifted;
  shifted.reserve(p.coeffs().size() + 1);
  shifted.push_back(0);
  shifted.insert(shifted.end(), p.coeffs().begin(), p.coeffs().end());
  return BinaryPartition{std::move(shifted)};
}

BinaryPartition remove_unit_block(const BinaryPartition& p, int m) {
  check_map_family(m);
  require_member(p, m);
  if (p.coeff(1) == 0)
    throw std::invalid_argument("remove_unit_block requires alpha_1 > 0, got " + to_string(p));
  const std::uint64_t block = std::uint64_t{1} << (m + 1);
  // alpha_1 is a positive multiple of 2^(m+1), so the block always fits
  std::vector<std::uint64_t> coeffs = p.coeffs();
  coeffs[0] -= block;
  return BinaryPartition{std::move(coeffs)};
}

BinaryPartition add_unit_block(const BinaryPartition& p, int m) {
  check_map_family(m);
  require_member(p, m);
  std::vector<std::uint64_t> coeffs = p.coeffs();
  if (coeffs.empty()) coeffs.push_back(0);
  coeffs[0] += std::uint64_t{1} << (m + 1);
  return BinaryPartition{std::move(coeffs)};
}

BinaryPartition remove_block_at(std::size_t i, const BinaryPartition& p, int m) {
  check_map_family(m);
  if (i < 2 || i > std::size_t(m) + 2)
    throw std::invalid_argument("block index " + std::to_string(i) +
                                " outside 2.." + std::to_string(m + 2));
  const PartitionClass c = classify(p, m);
  if (c.kind != PartitionClass::Kind::no_unit_parts || c.eps->at(i) != 1)
    throw std::invalid_argument("remove_block_at(" + std::to_string(i) +
                                ") requires eps_i = 1, got " + to_string(p));
  std::vector<std::uint64_t> coeffs = p.coeffs();
  coeffs[i - 1] -= block_size(i, m);
  return BinaryPartition{std::move(coeffs)};
}

BinaryPartition add_block_at(std::size_t i, const BinaryPartition& p, int m) {
  check_map_family(m);
  if (i < 2 || i > std::size_t(m) + 2)
    throw std::invalid_argument("block index " + std::to_string(i) +
                                " outside 2.." + std::to_string(m + 2));
  const PartitionClass c = classify(p, m);
  if (c.kind != PartitionClass::Kind::no_unit_parts || c.eps->at(i) != 0)
    throw std::invalid_argument("add_block_at(" + std::to_string(i) +
                                ") requires eps_i = 0, got " + to_string(p));
  std::vector<std::uint64_t> coeffs = p.coeffs();
  if (coeffs.size() < i) coeffs.resize(i, 0);
  coeffs[i - 1] += block_size(i, m);
  return BinaryPartition{std::move(coeffs)};
}

bool collapse_adds_forced_block(int m, std::uint64_t n, unsigned k) {
  // true when n/2^(m+1) odd pairs with even k, or even with odd k
  const bool odd_multiple = (n >> (m + 1)) & 1;
  return odd_multiple == (k % 2 == 0);
}

std::uint64_t collapse_target(int m, std::uint64_t n, unsigned k) {
  const std::uint64_t stride = std::uint64_t{1} << (m + 1);
  const std::uint64_t removed = (k + (collapse_adds_forced_block(m, n, k) ? 1 : 0)) * stride;
  if (removed > n)
    throw std::invalid_argument("collapse target would be negative");
  return (n - removed) / 2;
}

BinaryPartition collapse_class(const BinaryPartition& p, int m) {
  const PartitionClass c = classify(p, m);
  if (c.kind != PartitionClass::Kind::no_unit_parts)
    throw std::invalid_argument("collapse_class requires alpha_1 = 0, got " + to_string(p));
  const unsigned k = c.eps->low_flag_count();
  const bool forced = collapse_adds_forced_block(m, c.n, k);
  if (c.eps->bits.back() != (forced ? 1 : 0))
    throw std::logic_error("forced last epsilon bit of " + to_string(p) +
                           " disagrees with the parity analysis");
  BinaryPartition q = p;
  if (forced) q = remove_block_at(std::size_t(m) + 2, q, m);
  for (std::size_t i = std::size_t(m) + 1; i >= 2; --i)
    if (c.eps->at(i) == 1) q = remove_block_at(i, q, m);
  return halve_parts(q, m);
}

}  // namespace bpc
