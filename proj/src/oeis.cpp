#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "bpc/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

namespace bpc {

namespace fs = std::filesystem;

bool valid_oeis_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

BFileParseError::BFileParseError(std::size_t line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

void require_id(const std::string& id) {
  if (!valid_oeis_id(id))
    throw std::invalid_argument("malformed OEIS id \"" + id +
                                "\" (expected A followed by six digits)");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string id) {
  require_id(id);
  BFile out;
  out.id = std::move(id);
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields{std::string(line)};
    std::int64_t index = 0;
    std::string value;
    if (!(fields >> index >> value))
      throw BFileParseError(lineno, "expected \"index value\", got \"" + std::string(line) + "\"");
    std::string extra;
    if (fields >> extra)
      throw BFileParseError(lineno, "trailing token \"" + extra + "\"");
    Count v;
    try {
      v = Count(value);
    } catch (const std::exception&) {
      throw BFileParseError(lineno, "bad integer \"" + value + "\"");
    }
    if (v < 0) throw BFileParseError(lineno, "negative count " + value);
    if (!out.entries.empty() && index <= out.entries.back().index)
      throw BFileParseError(lineno, "index " + std::to_string(index) +
                                        " does not increase past " +
                                        std::to_string(out.entries.back().index));
    out.entries.push_back({index, std::move(v)});
  }
  return out;
}

std::string to_bfile_text(const BFile& b) {
  std::ostringstream os;
  for (const auto& e : b.entries) os << e.index << ' ' << e.value.str() << '\n';
  return os.str();
}

BFile load_bfile(const fs::path& file, std::string id) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open b-file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str(), std::move(id));
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("BPC_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "bpc";
  return fs::path(".bpc-cache");
}

namespace {

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

std::string download_bfile(const std::string& id) {
  httplib::Client client("https://oeis.org");
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  client.set_follow_location(true);
  const std::string path = "/" + id + "/" + bfile_name(id);
  auto res = client.Get(path);
  if (!res)
    throw NetworkError("fetching " + id + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw NetworkError("fetching " + id + " failed: HTTP status " +
                       std::to_string(res->status));
  return res->body;
}

}  // namespace

BFile fetch(const std::string& id, const fs::path& cache_dir, bool allow_network) {
  require_id(id);
  const fs::path cached = cache_dir / bfile_name(id);
  if (fs::exists(cached)) return load_bfile(cached, id);
  if (!allow_network)
    throw NetworkError(id + " is not cached and network fetch is disabled");

  const std::string body = download_bfile(id);
  BFile parsed = parse_bfile(body, id);  // validate before caching

  fs::create_directories(cache_dir);
  // write-then-rename keeps concurrent fetchers from seeing torn files
  const fs::path tmp = cached.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, cached);
  return parsed;
}

CompareReport compare_sequence(const std::vector<Count>& local, const BFile& remote,
                               std::int64_t offset) {
  CompareReport report;
  for (const auto& e : remote.entries) {
    if (e.index < offset) continue;
    const std::uint64_t pos = std::uint64_t(e.index - offset);
    if (pos >= local.size()) break;
    ++report.compared;
    if (local[std::size_t(pos)] != e.value) {
      report.mismatch = CompareMismatch{e.index, local[std::size_t(pos)], e.value};
      break;
    }
  }
  if (report.compared == 0)
    throw std::invalid_argument("no overlap between the local sequence and " + remote.id +
                                " at offset " + std::to_string(offset));
  return report;
}

}  // namespace bpc
