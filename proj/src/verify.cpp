#include "bpc/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bpc/bijections.hpp"

namespace bpc {

namespace {

std::string range_scope(int m_min, int m_max, std::uint64_t n_max) {
  std::ostringstream os;
  os << "m=" << m_min << ".." << m_max << " n<=" << n_max;
  return os.str();
}

}  // namespace

SuiteReport verify_oracle(int m_min, int m_max, std::uint64_t n_max, MemoTable& memo,
                          std::uint64_t cap) {
  SuiteReport report{.suite = "oracle", .scope = range_scope(m_min, m_max, n_max)};
  for (int m = m_min; m <= m_max; ++m) {
    const DivisibilityProfile profile(m);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      ++report.checked;
      const Count expected = count_by_enumeration(n, profile, cap);
      const Count got = partition_count(m, n, memo);
      if (got != expected) {
        report.failure = VerifyFailure{
            m, n, "recurrence gives " + got.str() + ", enumeration gives " + expected.str()};
        return report;
      }
    }
  }
  return report;
}

SuiteReport verify_partial_sums(int m_min, int m_max, std::uint64_t max_multiple,
                                MemoTable& memo) {
  if (m_min < 0) throw std::invalid_argument("partial sums require m >= 0");
  SuiteReport report{.suite = "partial-sums",
                     .scope = "m=" + std::to_string(m_min) + ".." + std::to_string(m_max) +
                              " k<=" + std::to_string(max_multiple)};
  for (int m = m_min; m <= m_max; ++m) {
    for (std::uint64_t k = 0; k <= max_multiple; ++k) {
      const std::uint64_t n = k << (m + 1);
      ++report.checked;
      const Count direct = partition_count(m, n, memo);
      const Count summed = partial_sum_count(m, n, memo);
      if (direct != summed) {
        report.failure = VerifyFailure{
            m, n, "direct value " + direct.str() + ", partial sum " + summed.str()};
        return report;
      }
    }
  }
  return report;
}

SuiteReport verify_closed_forms(int m_max, MemoTable& memo) {
  SuiteReport report{.suite = "closed-forms", .scope = "m=0.." + std::to_string(m_max)};
  for (int m = 0; m <= m_max; ++m) {
    const auto [first, second] = closed_form_counts(m);
    const std::uint64_t half = std::uint64_t{1} << m;
    ++report.checked;
    if (Count got = partition_count(m - 1, half, memo); got != first) {
      report.failure =
          VerifyFailure{m - 1, half, "closed form " + first.str() + ", recurrence " + got.str()};
      return report;
    }
    ++report.checked;
    if (Count got = partition_count(m - 1, 2 * half, memo); got != second) {
      report.failure = VerifyFailure{m - 1, 2 * half,
                                     "closed form " + second.str() + ", recurrence " + got.str()};
      return report;
    }
  }
  return report;
}

namespace {

using Pattern = std::vector<std::uint8_t>;

struct ClassifiedSet {
  std::vector<BinaryPartition> all;          // lex order
  std::vector<std::uint32_t> with_unit;      // indices into all
  std::map<Pattern, std::vector<std::uint32_t>> buckets;
};

ClassifiedSet classify_all(std::uint64_t n, int m, std::uint64_t cap) {
  ClassifiedSet set;
  set.all = enumerate_partitions(n, DivisibilityProfile(m), cap);
  for (std::uint32_t idx = 0; idx < set.all.size(); ++idx) {
    const PartitionClass c = classify(set.all[idx], m);
    if (c.kind == PartitionClass::Kind::with_unit_parts)
      set.with_unit.push_back(idx);
    else
      set.buckets[c.eps->bits].push_back(idx);
  }
  return set;
}

// All epsilon patterns whose forced last bit is consistent at total n:
// the m free bits range over every combination.
std::vector<Pattern> consistent_patterns(int m, std::uint64_t n) {
  std::vector<Pattern> out;
  out.reserve(std::size_t(1) << m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Pattern p(std::size_t(m) + 1, 0);
    unsigned k = 0;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) {
        p[std::size_t(b)] = 1;
        ++k;
      }
    p.back() = collapse_adds_forced_block(m, n, k) ? 1 : 0;
    out.push_back(std::move(p));
  }
  return out;
}

const std::vector<std::uint32_t>& bucket_of(const ClassifiedSet& set, const Pattern& p) {
  static const std::vector<std::uint32_t> empty;
  auto it = set.buckets.find(p);
  return it == set.buckets.end() ? empty : it->second;
}

// image of `domain` under `map`, in domain order (the maps preserve the
// lexicographic order, so the result arrives sorted)
std::vector<BinaryPartition> image_of(const ClassifiedSet& set,
                                      const std::vector<std::uint32_t>& domain,
                                      const std::function<BinaryPartition(const BinaryPartition&)>& map) {
  std::vector<BinaryPartition> out;
  out.reserve(domain.size());
  for (std::uint32_t idx : domain) out.push_back(map(set.all[idx]));
  std::sort(out.begin(), out.end());
  return out;
}

bool sets_equal(const std::vector<BinaryPartition>& image,
                const std::vector<BinaryPartition>& codomain_sorted) {
  return image.size() == codomain_sorted.size() &&
         std::equal(image.begin(), image.end(), codomain_sorted.begin());
}

std::vector<BinaryPartition> codomain_subset(const ClassifiedSet& set, const Pattern& p) {
  std::vector<BinaryPartition> out;
  for (std::uint32_t idx : bucket_of(set, p)) out.push_back(set.all[idx]);
  return out;
}

}  // namespace

SuiteReport verify_bijections(int m_max, std::uint64_t n_max, MemoTable& memo,
                              std::uint64_t cap, BinomialFn weight) {
  SuiteReport report{.suite = "bijections", .scope = range_scope(0, m_max, n_max)};
  if (!weight) weight = [](unsigned n, unsigned k) { return binomial(n, k); };

  const auto fail = [&report](int m, std::uint64_t n, std::string detail) {
    report.failure = VerifyFailure{m, n, std::move(detail)};
  };

  for (int m = 0; m <= m_max; ++m) {
    const std::uint64_t stride = std::uint64_t{1} << (m + 1);
    for (std::uint64_t n = 0; n <= n_max; n += stride) {
      const ClassifiedSet set = classify_all(n, m, cap);

      // cover: every partition fell into exactly one of the 1 + 2^(m+1)
      // classes, and no inconsistent pattern showed up
      ++report.checked;
      std::size_t classified = set.with_unit.size();
      for (const auto& [pattern, members] : set.buckets) classified += members.size();
      if (classified != set.all.size() ||
          set.buckets.size() > (std::size_t(1) << (m + 1))) {
        fail(m, n, "class decomposition does not cover the enumeration");
        return report;
      }

      const std::optional<ClassifiedSet> prev =
          n >= stride ? std::optional<ClassifiedSet>(classify_all(n - stride, m, cap))
                      : std::nullopt;

      // removing a unit block must reach every partition of n - 2^(m+1)
      if (prev) {
        ++report.checked;
        const auto image = image_of(set, set.with_unit, [m](const BinaryPartition& p) {
          return remove_unit_block(p, m);
        });
        if (!sets_equal(image, prev->all)) {
          fail(m, n, "unit-block removal is not a bijection onto the smaller total");
          return report;
        }
      }

      // per-class block removals, including provably empty classes
      const std::vector<Pattern> patterns = consistent_patterns(m, n);
      if (prev) {
        for (std::size_t i = 2; i <= std::size_t(m) + 2; ++i) {
          for (const Pattern& p : patterns) {
            if (p[i - 2] != 1) continue;
            Pattern flipped = p;
            flipped[i - 2] = 0;
            ++report.checked;
            const auto image = image_of(set, bucket_of(set, p), [i, m](const BinaryPartition& q) {
              return remove_block_at(i, q, m);
            });
            if (!sets_equal(image, codomain_subset(*prev, flipped))) {
              fail(m, n, "block removal at index " + std::to_string(i) +
                             " is not a bijection between its classes");
              return report;
            }
          }
        }
      }

      // class collapses; group class sizes by target on the way
      std::map<std::uint64_t, Count> grouped;
      std::map<std::uint64_t, std::vector<BinaryPartition>> target_enum;
      for (const Pattern& p : patterns) {
        unsigned k = 0;
        for (int b = 0; b < m; ++b) k += p[std::size_t(b)];
        const std::uint64_t removed_strides =
            k + (collapse_adds_forced_block(m, n, k) ? 1 : 0);
        if (removed_strides * stride > n) {
          // too many forced blocks to fit inside n: the class must be empty
          ++report.checked;
          if (!bucket_of(set, p).empty()) {
            fail(m, n, "a class needing " + std::to_string(removed_strides) +
                           " blocks inside a total of " + std::to_string(n) +
                           " is not empty");
            return report;
          }
          continue;
        }
        const std::uint64_t target = collapse_target(m, n, k);
        auto [it, fresh] = target_enum.try_emplace(target);
        if (fresh) it->second = enumerate_partitions(target, DivisibilityProfile(m), cap);

        ++report.checked;
        const auto& domain = bucket_of(set, p);
        const auto image = image_of(set, domain, [m](const BinaryPartition& q) {
          return collapse_class(q, m);
        });
        if (!sets_equal(image, it->second)) {
          fail(m, n, "class collapse misses its target for flag count " + std::to_string(k));
          return report;
        }
        grouped[target] += std::uint64_t(domain.size());
      }

      // the grouped sizes must reproduce the recurrence branch term by term
      if (n > 0) {
        ++report.checked;
        const Count unit_term = partition_count(m, n - stride, memo);
        if (Count(set.with_unit.size()) != unit_term) {
          fail(m, n, "unit-part class has size " + std::to_string(set.with_unit.size()) +
                         ", recurrence term is " + unit_term.str());
          return report;
        }
      }
      const bool odd_multiple = (n >> (m + 1)) & 1;
      for (const auto& [target, size] : grouped) {
        // recover the summand index: number of strides removed before halving
        const std::uint64_t removed = (n - 2 * target) >> (m + 1);
        if (odd_multiple ? removed % 2 == 0 : removed % 2 == 1) {
          fail(m, n, "grouped target parity is inconsistent");
          return report;
        }
        ++report.checked;
        const Count expected =
            weight(unsigned(m + 1), unsigned(removed)) * partition_count(m, target, memo);
        if (size != expected) {
          fail(m, n, "classes reaching target " + std::to_string(target) + " hold " +
                         size.str() + " partitions, the weighted term is " + expected.str());
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace bpc
