#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bpc/count.hpp"

namespace bpc {

// One "index value" line of an OEIS b-file.
struct BFileEntry {
  std::int64_t index = 0;
  Count value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
  std::string id;  // A followed by six digits
  std::vector<BFileEntry> entries;  // indices strictly increasing

  friend bool operator==(const BFile&, const BFile&) = default;
};

bool valid_oeis_id(std::string_view id);

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse b-file text: one "index value" pair per line, '#' comments and
// blank lines ignored, indices strictly increasing.
BFile parse_bfile(std::string_view text, std::string id);

// Canonical serialization, one "index value" line per entry.  Parsing the
// result reproduces the entries exactly.
std::string to_bfile_text(const BFile& b);

BFile load_bfile(const std::filesystem::path& file, std::string id);

// Cache location: BPC_CACHE_DIR if set, otherwise ~/.cache/bpc, otherwise
// ./.bpc-cache.
std::filesystem::path default_cache_dir();

/* Cached fetch of the b-file for an OEIS id.  A cache hit never touches
 * the network.  On a miss the file is downloaded over HTTPS (when allowed),
 * written to the cache atomically so concurrent fetchers cannot tear it,
 * and parsed.  Throws NetworkError when the file is not cached and cannot
 * be downloaded.
 */
BFile fetch(const std::string& id, const std::filesystem::path& cache_dir,
            bool allow_network = true);

// Comparison of a locally computed sequence against b-file entries, with
// local position 0 aligned to remote index `offset`.
struct CompareMismatch {
  std::int64_t index = 0;
  Count local;
  Count remote;
};

struct CompareReport {
  std::uint64_t compared = 0;  // overlapping positions examined
  std::optional<CompareMismatch> mismatch;  // first disagreement

  bool agree() const { return !mismatch.has_value(); }
};

CompareReport compare_sequence(const std::vector<Count>& local, const BFile& remote,
                               std::int64_t offset);

}  // namespace bpc
