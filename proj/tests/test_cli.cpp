#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "bpc/oeis.hpp"
#include "bpc/recurrence.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(BPC_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// keep the cache away from any real user cache
struct CacheGuard {
  fs::path dir;
  CacheGuard() {
    dir = fs::temp_directory_path() / ("bpc-cli-cache-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    ::setenv("BPC_CACHE_DIR", dir.c_str(), 1);
  }
  ~CacheGuard() { fs::remove_all(dir); }
} cache_guard;

const std::string fixtures = std::string("--fixtures ") + BPC_FIXTURES_DIR;

}  // namespace

TEST_CASE("seq emits the documented formats") {
  auto csv = run_cli("seq --m 1 --count 5 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "1,3,7,13,23\n");

  auto bfile = run_cli("seq --m 0 --count 3 --format bfile");
  CHECK(bfile.exit_code == 0);
  CHECK(bfile.out == "0 1\n1 2\n2 4\n");

  auto unrestricted = run_cli("seq --m -1 --count 8 --format csv");
  CHECK(unrestricted.out == "1,1,2,2,4,4,6,6\n");

  auto padded = run_cli("seq --m 0 --count 8 --padded --format csv");
  CHECK(padded.out == "1,0,2,0,4,0,6,0\n");
}

TEST_CASE("seq formats carry identical values") {
  auto js = run_cli("seq --m 2 --count 4 --format json");
  REQUIRE(js.exit_code == 0);
  const json parsed = json::parse(js.out);
  REQUIRE(parsed.size() == 4);
  CHECK(parsed[1]["index"] == 1);
  CHECK(parsed[1]["value"] == "4");  // big integers travel as decimal strings
  CHECK(parsed[3]["value"] == "24");

  // the b-file output parses back to the in-memory sequence
  auto bf = run_cli("seq --m 2 --count 4 --format bfile");
  const auto reparsed = bpc::parse_bfile(bf.out, "A000000");
  bpc::MemoTable memo;
  const auto direct = bpc::stride_sequence(2, 4, memo);
  REQUIRE(reparsed.entries.size() == direct.size());
  for (std::size_t k = 0; k < direct.size(); ++k) {
    CHECK(reparsed.entries[k].index == std::int64_t(k));
    CHECK(reparsed.entries[k].value == direct[k]);
    CHECK(parsed[k]["value"] == direct[k].str());
  }
}

TEST_CASE("seq rejects bad arguments") {
  CHECK(run_cli("seq --m -2 --count 1").exit_code == 2);
  CHECK(run_cli("seq --m 0 --count 0").exit_code == 2);
  CHECK(run_cli("seq --m 0 --count 3 --format yaml").exit_code == 2);
  CHECK(run_cli("seq").exit_code == 2);
}

TEST_CASE("rank emits the records of the free-rank table") {
  auto csv = run_cli("rank --j-max 15 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.starts_with("j,alpha,D,b,f1,f2\n0,0,0,1,0,0\n"));
  // the f1 column across the first sixteen rows
  std::string f1s;
  std::size_t pos = csv.out.find('\n') + 1;
  while (pos < csv.out.size()) {
    const std::size_t eol = csv.out.find('\n', pos);
    const std::string row = csv.out.substr(pos, eol - pos);
    const std::size_t last_comma = row.rfind(',');
    const std::size_t prev_comma = row.rfind(',', last_comma - 1);
    f1s += row.substr(prev_comma + 1, last_comma - prev_comma - 1) + ",";
    pos = eol + 1;
  }
  CHECK(f1s == "0,0,0,0,1,2,4,7,11,16,23,32,43,57,74,95,");

  auto single = run_cli("rank --j-max 0 --format csv");
  CHECK(single.out == "j,alpha,D,b,f1,f2\n0,0,0,1,0,0\n");

  auto js = run_cli("rank --j-max 5 --format json --show-alt-f2");
  REQUIRE(js.exit_code == 0);
  const json rows = json::parse(js.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[5]["f1"] == "2");
  CHECK(rows[5]["f2"] == "3");       // running sum of 0,0,0,0,1,2
  CHECK(rows[5]["f2_alt"] == "12");  // the constant-summand variant, 6 * 2
  CHECK(rows[4]["b"] == 15);
}

TEST_CASE("verify runs the selected suites") {
  auto ok = run_cli("verify --m-max 2 --n-max 64");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("all selected suites passed") != std::string::npos);

  auto closed = run_cli("verify --suite lemma5 --m-max 20");
  CHECK(closed.exit_code == 0);
  CHECK(closed.out.find("42 identities") != std::string::npos);

  auto one = run_cli("verify --suite oracle --m-max 1 --n-max 32");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("oracle") != std::string::npos);
  CHECK(one.out.find("bijections") == std::string::npos);
}

TEST_CASE("oeis comparisons against the bundled fixtures") {
  auto agree = run_cli("oeis A018819 --m -1 --count 16 " + fixtures);
  CHECK(agree.exit_code == 0);
  CHECK(agree.out.find("agree") != std::string::npos);

  CHECK(run_cli("oeis A000123 --m 0 --count 16 " + fixtures).exit_code == 0);
  CHECK(run_cli("oeis A131205 --m 1 --count 16 " + fixtures).exit_code == 0);

  // wrong family: the values disagree from index 1 on
  auto mismatch = run_cli("oeis A018819 --m 0 --count 16 " + fixtures);
  CHECK(mismatch.exit_code == 1);
  CHECK(mismatch.out.find("mismatch at index 1") != std::string::npos);

  // malformed id is a usage error, unknown id without --fetch is a network
  // error; the two exit codes stay distinct
  CHECK(run_cli("oeis 18819 --m 0 " + fixtures, true).exit_code == 2);
  CHECK(run_cli("oeis A999999 --m 0 " + fixtures, true).exit_code == 3);
}
